#include "posetgames/game_sequence.hpp"

#include <chrono>
#include <functional>
#include <unordered_map>

#include "json.hpp"

namespace pgames {

GameSequence::GameSequence(TermStore& store)
    : store_(store),
      one_(store.atom(1)),
      zero_(store.atom(0)),
      minus_one_(store.atom(-1)),
      minus_two_(store.atom(-2)),
      minus_three_(store.atom(-3)),
      star_(store.composite({minus_one_}, {minus_three_})),
      seq_{zero_} {}

GameRef GameSequence::M(GameRef g) const { return store_.composite({one_}, {g}); }
GameRef GameSequence::P(GameRef g) const { return store_.composite({g}, {minus_two_}); }
GameRef GameSequence::Pstar(GameRef g) const { return store_.composite({g}, {star_}); }
GameRef GameSequence::Pn(std::uint32_t n, GameRef g) const { return n % 2 == 1 ? P(g) : Pstar(g); }

GameRef GameSequence::G(std::uint32_t n) {
  while (seq_.size() <= n) {
    const auto k = static_cast<std::uint32_t>(seq_.size() - 1);
    seq_.push_back(M(Pn(k, seq_.back())));
  }
  return seq_[n];
}

MeanValue mean_value(const TermStore& store, GameRef g) {
  // Positions come sorted by creation index, so options are settled first.
  std::unordered_map<std::uint32_t, MeanValue> mean;
  for (GameRef p : store.positions(g)) {
    const Term& t = store.term(p);
    if (t.atomic) {
      mean[p.index] = store.poset().label(t.atom);
      continue;
    }
    MeanValue c;
    bool consistent = true;
    auto agree = [&](GameRef option, int shift) {
      const MeanValue& m = mean[option.index];
      if (!m) return false;
      if (!c) c = *m - shift;
      return *c == *m - shift;
    };
    for (GameRef o : t.left) consistent = consistent && agree(o, +1);
    for (GameRef o : t.right) consistent = consistent && agree(o, -1);
    mean[p.index] = consistent ? c : std::nullopt;
  }
  return mean[g.index];
}

std::string ClaimReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["n"] = n;
  j["expected"] = expected;
  j["actual"] = actual ? nlohmann::ordered_json(*actual) : nlohmann::ordered_json(nullptr);
  j["ok"] = status() == Status::Skipped ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(ok());
  j["skipped"] = status() == Status::Skipped;
  j["micros"] = micros;
  return j.dump();
}

namespace {

struct ClaimSpec {
  std::string id;
  bool expected;
  // Returns nullopt when the guard fails.
  std::function<std::optional<bool>(std::uint32_t)> eval;
};

std::vector<ClaimReport> run(const std::vector<ClaimSpec>& specs, std::uint32_t n_max, bool negate) {
  const std::size_t per_n = specs.size();
  std::vector<ClaimReport> out((n_max + 1) * per_n);
  const auto total = static_cast<std::int64_t>(out.size());
  // Relations share one thread-safe memo, so the order of evaluation does
  // not affect any result.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto n = static_cast<std::uint32_t>(static_cast<std::size_t>(i) / per_n);
    const ClaimSpec& spec = specs[static_cast<std::size_t>(i) % per_n];
    ClaimReport& r = out[static_cast<std::size_t>(i)];
    r.claim = spec.id;
    r.n = n;
    r.expected = negate ? !spec.expected : spec.expected;
    auto start = std::chrono::steady_clock::now();
    r.actual = spec.eval(n);
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

}  // namespace

std::vector<ClaimReport> verify_claims(GameSequence& seq, const Relations& rel, const VerifyOptions& opts) {
  const std::uint32_t n_max = opts.n_max;
  // Build every term up front; evaluation below only reads the store.
  std::vector<GameRef> g(n_max + 2), p(n_max + 1);
  for (std::uint32_t n = 0; n <= n_max + 1; ++n) g[n] = seq.G(n);
  for (std::uint32_t n = 0; n <= n_max; ++n) p[n] = seq.Pn(n, g[n]);
  TermStore& s = seq.store();
  const GameRef m1 = s.atom(-1), m2 = s.atom(-2), star = seq.star();

  using R = std::optional<bool>;
  const std::vector<ClaimSpec> specs = {
      {"1", false, [&](std::uint32_t n) -> R { return rel.tri(g[n], m1); }},
      {"2", false, [&](std::uint32_t n) -> R { return rel.leq(p[n], m1); }},
      {"3", false, [&](std::uint32_t n) -> R { return n % 2 == 0 ? R(rel.tri(p[n], m2)) : std::nullopt; }},
      {"4", false, [&](std::uint32_t n) -> R { return n % 2 == 1 ? R(rel.tri(p[n], star)) : std::nullopt; }},
      {"5", false, [&](std::uint32_t n) -> R { return n > 0 ? R(rel.leq(p[n], p[n - 1])) : std::nullopt; }},
      {"6", false, [&](std::uint32_t n) -> R { return n > 0 ? R(rel.leq(g[n + 1], g[n - 1])) : std::nullopt; }},
      {"7", false, [&](std::uint32_t n) -> R { return n > 0 ? R(rel.tri(g[n + 1], p[n - 1])) : std::nullopt; }},
      {"8", false, [&](std::uint32_t n) -> R { return rel.leq(g[n + 1], g[n]); }},
  };
  return run(specs, n_max, opts.negate_expectations);
}

std::vector<ClaimReport> verify_lemmas(GameSequence& seq, const Relations& rel, const VerifyOptions& opts) {
  const std::uint32_t n_max = opts.n_max;
  std::vector<GameRef> g(n_max + 2);
  for (std::uint32_t n = 0; n <= n_max + 1; ++n) g[n] = seq.G(n);
  const GameRef zero = seq.store().atom(0);

  using R = std::optional<bool>;
  const std::vector<ClaimSpec> specs = {
      {"monotone", true, [&](std::uint32_t n) -> R { return rel.is_monotone(g[n]); }},
      {"step_leq", true, [&](std::uint32_t n) -> R { return rel.leq(g[n], g[n + 1]); }},
      {"above_zero", true, [&](std::uint32_t n) -> R { return rel.leq(zero, g[n]); }},
      {"step_lt", true, [&](std::uint32_t n) -> R { return rel.strictly_less(g[n], g[n + 1]); }},
  };
  return run(specs, n_max, opts.negate_expectations);
}

}  // namespace pgames
