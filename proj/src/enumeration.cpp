#include <chrono>

#include "enumeration_internal.hpp"
#include "json.hpp"
#include "posetgames/enumeration.hpp"
#include "posetgames/generators.hpp"
#include "posetgames/notation.hpp"

namespace pgames {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::Saturated: return "saturated";
    case StopReason::MaxRounds: return "max_rounds";
    case StopReason::MaxValues: return "max_values";
    case StopReason::TimeLimit: return "time_limit";
    case StopReason::MaxCandidates: return "max_candidates";
  }
  return "unknown";
}

ValueTable enumerate_monotone_values_reference(TermStore& store, const Relations& rel, const EnumerationOptions& opts) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto& budget = opts.budget;
  auto out_of_time = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count() > budget.time_limit_seconds;
  };

  ValueTable t;
  const Poset& poset = store.poset();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    t.representatives.push_back(store.atom_game(poset.atom(i)));
    t.generation.push_back(0);
  }
  t.counts_per_round.push_back(t.size());
  t.stop_reason = StopReason::MaxRounds;
  bool stopped = t.size() >= budget.max_values;
  if (stopped) t.stop_reason = StopReason::MaxValues;

  for (std::uint32_t round = 1; !stopped && round <= budget.max_rounds; ++round) {
    const std::vector<GameRef> snapshot = t.representatives;
    std::vector<std::vector<std::uint32_t>> sets;
    if (opts.option_sets == OptionSets::Antichains) {
      auto incomparable = [&](std::size_t i, std::size_t j) {
        return !rel.leq(snapshot[i], snapshot[j]) && !rel.leq(snapshot[j], snapshot[i]);
      };
      sets = enumerate_antichains(snapshot.size(), incomparable, antichain_cap(budget.max_candidates_per_round));
    } else {
      sets = all_subsets(snapshot.size());
    }
    if (static_cast<std::uint64_t>(sets.size()) * sets.size() > budget.max_candidates_per_round) {
      t.stop_reason = StopReason::MaxCandidates;
      break;
    }

    std::size_t added = 0;
    for (std::size_t l = 0; l < sets.size() && !stopped; ++l) {
      std::vector<GameRef> left;
      for (auto i : sets[l]) left.push_back(snapshot[i]);
      for (std::size_t r = 0; r < sets.size(); ++r) {
        std::vector<GameRef> right;
        for (auto i : sets[r]) right.push_back(snapshot[i]);
        const GameRef g = store.composite(left, right);
        if (!rel.is_locally_monotone(g)) continue;
        bool known = false;
        for (GameRef v : t.representatives) {
          if (rel.equivalent(g, v)) {
            known = true;
            break;
          }
        }
        if (known) continue;
        t.representatives.push_back(g);
        t.generation.push_back(round);
        ++added;
        if (t.size() >= budget.max_values) {
          t.stop_reason = StopReason::MaxValues;
          stopped = true;
          break;
        }
      }
      if (out_of_time()) {
        t.stop_reason = StopReason::TimeLimit;
        stopped = true;
      }
    }
    t.counts_per_round.push_back(t.size());
    if (stopped) break;
    if (added == 0) {
      t.stop_reason = StopReason::Saturated;
      break;
    }
  }

  t.saturated = t.stop_reason == StopReason::Saturated;
  t.leq.assign(t.size(), std::vector<bool>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) t.leq[i][j] = rel.leq(t.representatives[i], t.representatives[j]);
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> value_poset_edges(const ValueTable& table) {
  const std::size_t n = table.size();
  auto less = [&](std::size_t i, std::size_t j) { return i != j && table.leq[i][j] && !table.leq[j][i]; };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (less(i, k) && less(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::string> validate_table(const TermStore& store, const ValueTable& table) {
  std::vector<std::string> problems;
  const Relations rel(store);
  const std::size_t n = table.size();
  auto name = [&](std::size_t i) { return "#" + std::to_string(i) + " " + print(store, table.representatives[i]); };

  std::unordered_map<std::uint32_t, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of.emplace(table.representatives[i].index, i);

  for (std::size_t i = 0; i < n; ++i) {
    const GameRef g = table.representatives[i];
    if (!rel.is_monotone(g)) problems.push_back(name(i) + " is not monotone");
    for (GameRef o : store.left(g)) {
      if (!index_of.contains(o.index)) problems.push_back(name(i) + " has a left option outside the table");
      if (!rel.leq(g, o)) problems.push_back(name(i) + " is not <= a left option");
    }
    for (GameRef o : store.right(g)) {
      if (!index_of.contains(o.index)) problems.push_back(name(i) + " has a right option outside the table");
      if (!rel.leq(o, g)) problems.push_back(name(i) + " is not >= a right option");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const bool ij = rel.leq(g, table.representatives[j]);
      if (ij != table.leq[i][j]) problems.push_back("order entry mismatch at " + name(i) + " vs " + name(j));
      if (i < j && ij && rel.leq(table.representatives[j], g))
        problems.push_back(name(i) + " is equivalent to " + name(j));
    }
  }
  // The order must be a partial order on values.
  for (std::size_t i = 0; i < n; ++i) {
    if (!table.leq[i][i]) problems.push_back(name(i) + " is not <= itself");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table.leq[i][j] && table.leq[j][k] && !table.leq[i][k])
          problems.push_back("order is not transitive at " + name(i) + ", " + name(j) + ", " + name(k));
  }
  return problems;
}

std::string table_to_json(const TermStore& store, const ValueTable& table) {
  nlohmann::ordered_json j;
  j["poset"] = store.poset().name();
  j["counts_per_round"] = table.counts_per_round;
  j["saturated"] = table.saturated;
  j["stop_reason"] = to_string(table.stop_reason);
  auto reps = nlohmann::ordered_json::array();
  for (GameRef g : table.representatives) reps.push_back(print(store, g));
  j["representatives"] = std::move(reps);
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : value_poset_edges(table)) edges.push_back({a, b});
  j["hasse_edges"] = std::move(edges);
  return j.dump();
}

namespace {

// Compares g with g extended by `extra` on one side.
void check_extension(TermStore& store, const Relations& rel, GameRef g, GameRef extra, bool left_side,
                     DominationReport& report) {
  std::vector<GameRef> l(store.left(g).begin(), store.left(g).end());
  std::vector<GameRef> r(store.right(g).begin(), store.right(g).end());
  (left_side ? l : r).push_back(extra);
  const GameRef extended = store.composite(l, r);
  ++report.trials;
  if (!rel.equivalent(g, extended)) report.counterexamples.emplace_back(print(store, g), print(store, extended));
}

}  // namespace

DominationReport check_domination(TermStore& store, const Relations& rel, std::uint64_t trials, std::uint64_t seed,
                                  int max_depth) {
  DominationReport report;
  std::mt19937_64 rng(seed);
  RandomGameShape base_shape{max_depth, 2, 0.3, true};
  RandomGameShape extra_shape{std::max(0, max_depth - 1), 2, 0.3, false};
  // A random extra option is dominated only some of the time; give up on a
  // base game after a few misses and draw a new one.
  constexpr int kAttempts = 32;
  const std::uint64_t max_draws = trials * 1000 + 1000;
  for (std::uint64_t draws = 0; report.trials < trials && draws < max_draws; ++draws) {
    const GameRef g = random_game(store, rng, base_shape);
    const bool left_side = std::bernoulli_distribution(0.5)(rng);
    const auto opts = left_side ? store.left(g) : store.right(g);
    const GameRef anchor = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      const GameRef extra = random_game(store, rng, extra_shape);
      const bool dominated = left_side ? rel.leq(extra, anchor) : rel.leq(anchor, extra);
      if (!dominated) continue;
      check_extension(store, rel, g, extra, left_side, report);
      break;
    }
  }
  return report;
}

DominationReport check_domination_exhaustive(TermStore& store, const Relations& rel) {
  const Poset& poset = store.poset();
  std::vector<GameRef> atoms;
  for (std::size_t i = 0; i < poset.size(); ++i) atoms.push_back(store.atom_game(poset.atom(i)));
  if (atoms.size() > 8) throw std::length_error("exhaustive domination check needs at most 8 atoms");

  std::vector<GameRef> pool = atoms;
  const auto subsets = all_subsets(atoms.size());
  for (const auto& ls : subsets) {
    for (const auto& rs : subsets) {
      std::vector<GameRef> l, r;
      for (auto i : ls) l.push_back(atoms[i]);
      for (auto i : rs) r.push_back(atoms[i]);
      pool.push_back(store.composite(l, r));
    }
  }

  DominationReport report;
  for (GameRef a : pool) {
    for (GameRef b : pool) {
      const GameRef g = store.composite({a}, {b});
      for (GameRef extra : pool) {
        if (rel.leq(extra, a)) check_extension(store, rel, g, extra, true, report);
        if (rel.leq(b, extra)) check_extension(store, rel, g, extra, false, report);
      }
    }
  }
  return report;
}

}  // namespace pgames
