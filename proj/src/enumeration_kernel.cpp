// Matrix-based enumeration kernel.
//
// Known values are closed under taking options, so comparing a candidate
// <L|R> (L, R sets of known values) against every known value only needs
// the value-by-value relation matrices plus the candidate's own relation
// vectors, filled in creation order:
//
//   G <| Y  iff  some r in R has r <= Y, or some Y^L has G <= Y^L
//   G <= Y  iff  every l in L has l <| Y, every Y^R has G <| Y^R,
//                and G <| Y when Y is atomic
//   Y <| G  iff  some Y^R has Y^R <= G, or some l in L has Y <= l
//   Y <= G  iff  every Y^L has Y^L <| G, every r in R has Y <| r,
//                and Y <| G when Y is atomic

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "enumeration_internal.hpp"
#include "posetgames/enumeration.hpp"

namespace pgames {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

struct ValueGraph {
  std::vector<GameRef> refs;
  std::vector<std::vector<std::uint32_t>> left, right;
  std::vector<char> atomic;
  std::vector<std::uint32_t> generation;
  // row[i][j]: value i relates to value j. col[j][i]: the same bit.
  std::vector<Bits> leq_row, tri_row, leq_col, tri_col;

  std::size_t size() const { return refs.size(); }
};

// Candidate-versus-value relation vectors.
struct Vectors {
  std::vector<char> leq_cv, tri_cv, leq_vc, tri_vc;
  bool self_leq = false, self_tri = false;

  void reset(std::size_t n) {
    for (auto* v : {&leq_cv, &tri_cv, &leq_vc, &tri_vc}) v->assign(n, 0);
  }
};

// Per-option-set aggregates over the relation matrices.
struct SideSummary {
  Bits a;  // left: values Y with l <| Y for all l.   right: values Y with r <= Y for some r.
  Bits b;  // left: values Y with Y <= l for some l.  right: values Y with Y <| r for all r.
};

SideSummary summarize_left(const ValueGraph& g, const std::vector<std::uint32_t>& set, std::size_t n) {
  SideSummary s{Bits(n), Bits(n)};
  s.a.set();
  for (std::uint32_t l : set) {
    Bits tri = g.tri_row[l];
    tri.resize(n);
    s.a &= tri;
    Bits leq = g.leq_col[l];
    leq.resize(n);
    s.b |= leq;
  }
  return s;
}

SideSummary summarize_right(const ValueGraph& g, const std::vector<std::uint32_t>& set, std::size_t n) {
  SideSummary s{Bits(n), Bits(n)};
  s.b.set();
  for (std::uint32_t r : set) {
    Bits leq = g.leq_row[r];
    leq.resize(n);
    s.a |= leq;
    Bits tri = g.tri_col[r];
    tri.resize(n);
    s.b &= tri;
  }
  return s;
}

enum class Verdict { NotMonotone, Duplicate, New };

// Compares <L|R> against the first n values of g.
Verdict classify(const ValueGraph& g, std::size_t n, const std::vector<std::uint32_t>& L,
                 const std::vector<std::uint32_t>& R, const SideSummary& ls, const SideSummary& rs, Vectors& v) {
  v.reset(n);
  const std::uint32_t last_option = std::max(L.back(), R.back());
  bool monotone_checked = false;
  auto locally_monotone = [&] {
    for (std::uint32_t l : L)
      if (!v.leq_cv[l]) return false;
    for (std::uint32_t r : R)
      if (!v.leq_vc[r]) return false;
    return true;
  };

  bool duplicate = false;
  for (std::size_t y = 0; y < n; ++y) {
    const auto& yl = g.left[y];
    const auto& yr = g.right[y];
    const bool atom = g.atomic[y] != 0;

    bool tri_cv = rs.a.test(y);
    for (std::size_t i = 0; !tri_cv && i < yl.size(); ++i) tri_cv = v.leq_cv[yl[i]];
    bool leq_cv = ls.a.test(y);
    for (std::size_t i = 0; leq_cv && i < yr.size(); ++i) leq_cv = v.tri_cv[yr[i]];
    if (atom) leq_cv = leq_cv && tri_cv;

    bool tri_vc = ls.b.test(y);
    for (std::size_t i = 0; !tri_vc && i < yr.size(); ++i) tri_vc = v.leq_vc[yr[i]];
    bool leq_vc = rs.b.test(y);
    for (std::size_t i = 0; leq_vc && i < yl.size(); ++i) leq_vc = v.tri_vc[yl[i]];
    if (atom) leq_vc = leq_vc && tri_vc;

    v.tri_cv[y] = tri_cv;
    v.leq_cv[y] = leq_cv;
    v.tri_vc[y] = tri_vc;
    v.leq_vc[y] = leq_vc;
    if (leq_cv && leq_vc) duplicate = true;

    if (y == last_option) {
      if (!locally_monotone()) return Verdict::NotMonotone;
      monotone_checked = true;
    }
  }
  if (!monotone_checked && !locally_monotone()) return Verdict::NotMonotone;
  if (duplicate) return Verdict::Duplicate;

  // G <= G: every l <| G and G <| every r.  G <| G: some r <= G or G <= some l.
  v.self_leq = true;
  for (std::uint32_t l : L) v.self_leq = v.self_leq && v.tri_vc[l];
  for (std::uint32_t r : R) v.self_leq = v.self_leq && v.tri_cv[r];
  v.self_tri = false;
  for (std::uint32_t r : R) v.self_tri = v.self_tri || v.leq_vc[r];
  for (std::uint32_t l : L) v.self_tri = v.self_tri || v.leq_cv[l];
  return Verdict::New;
}

void add_value(ValueGraph& g, GameRef ref, std::vector<std::uint32_t> L, std::vector<std::uint32_t> R, bool atomic,
               std::uint32_t generation, const Vectors& v) {
  const std::size_t n = g.size();
  for (auto* m : {&g.leq_row, &g.tri_row, &g.leq_col, &g.tri_col})
    for (Bits& b : *m) b.resize(n + 1);
  Bits leq_row(n + 1), tri_row(n + 1), leq_col(n + 1), tri_col(n + 1);
  for (std::size_t y = 0; y < n; ++y) {
    leq_row[y] = v.leq_cv[y];
    tri_row[y] = v.tri_cv[y];
    leq_col[y] = v.leq_vc[y];
    tri_col[y] = v.tri_vc[y];
    g.leq_row[y][n] = v.leq_vc[y];
    g.tri_row[y][n] = v.tri_vc[y];
    g.leq_col[y][n] = v.leq_cv[y];
    g.tri_col[y][n] = v.tri_cv[y];
  }
  leq_row[n] = leq_col[n] = v.self_leq;
  tri_row[n] = tri_col[n] = v.self_tri;
  g.leq_row.push_back(std::move(leq_row));
  g.tri_row.push_back(std::move(tri_row));
  g.leq_col.push_back(std::move(leq_col));
  g.tri_col.push_back(std::move(tri_col));
  g.refs.push_back(ref);
  g.left.push_back(std::move(L));
  g.right.push_back(std::move(R));
  g.atomic.push_back(atomic ? 1 : 0);
  g.generation.push_back(generation);
}

std::vector<std::vector<std::uint32_t>> antichains(const ValueGraph& g, std::uint64_t cap) {
  const std::size_t n = g.size();
  std::vector<Bits> incomparable(n);
  for (std::size_t i = 0; i < n; ++i) incomparable[i] = ~(g.leq_row[i] | g.leq_col[i]);
  return enumerate_antichains(n, [&](std::size_t i, std::size_t j) { return incomparable[i].test(j); }, cap);
}

ValueTable to_table(const ValueGraph& g) {
  ValueTable t;
  t.representatives = g.refs;
  t.generation = g.generation;
  t.leq.assign(g.size(), std::vector<bool>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) t.leq[i][j] = g.leq_row[i].test(j);
  return t;
}

}  // namespace

ValueTable enumerate_monotone_values(TermStore& store, const EnumerationOptions& opts) {
  const auto start = Clock::now();
  const auto& budget = opts.budget;
  auto out_of_time = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count() > budget.time_limit_seconds;
  };

  ValueGraph g;
  const Poset& poset = store.poset();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    Vectors v;
    v.reset(i);
    for (std::size_t j = 0; j < i; ++j) {
      const bool ij = poset.le(poset.atom(i), poset.atom(j));
      const bool ji = poset.le(poset.atom(j), poset.atom(i));
      v.leq_cv[j] = v.tri_cv[j] = ij;
      v.leq_vc[j] = v.tri_vc[j] = ji;
    }
    v.self_leq = v.self_tri = true;
    add_value(g, store.atom_game(poset.atom(i)), {}, {}, true, 0, v);
  }

  std::vector<std::size_t> counts{g.size()};
  StopReason reason = StopReason::MaxRounds;
  bool stopped = false;
  if (g.size() >= budget.max_values) {
    reason = StopReason::MaxValues;
    stopped = true;
  }

  for (std::uint32_t round = 1; !stopped && round <= budget.max_rounds; ++round) {
    const std::size_t snapshot = g.size();
    std::vector<std::vector<std::uint32_t>> sets;
    if (opts.option_sets == OptionSets::Antichains) {
      sets = antichains(g, antichain_cap(budget.max_candidates_per_round));
    } else {
      sets = all_subsets(snapshot);
    }
    const auto pairs = static_cast<std::uint64_t>(sets.size()) * sets.size();
    if (pairs > budget.max_candidates_per_round) {
      reason = StopReason::MaxCandidates;
      break;
    }

    std::vector<SideSummary> as_left(sets.size()), as_right(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      as_left[i] = summarize_left(g, sets[i], snapshot);
      as_right[i] = summarize_right(g, sets[i], snapshot);
    }

    // Screen every pair against the snapshot in parallel.
    std::atomic<bool> timed_out{false};
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(sets.size());
    const auto nsets = static_cast<std::int64_t>(sets.size());
#pragma omp parallel
    {
      Vectors v;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t li = 0; li < nsets; ++li) {
        if (timed_out.load(std::memory_order_relaxed)) continue;
        if (out_of_time()) {
          timed_out.store(true, std::memory_order_relaxed);
          continue;
        }
        const auto l = static_cast<std::size_t>(li);
        for (std::size_t r = 0; r < sets.size(); ++r) {
          if (classify(g, snapshot, sets[l], sets[r], as_left[l], as_right[r], v) == Verdict::New)
            found[l].emplace_back(static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r));
        }
      }
    }
    if (timed_out) {
      reason = StopReason::TimeLimit;
      break;
    }

    // Serial insertion in (left, right) order; later candidates are also
    // compared against values added earlier in this round.
    std::size_t added = 0;
    Vectors v;
    for (const auto& bucket : found) {
      for (auto [l, r] : bucket) {
        const std::size_t n = g.size();
        const SideSummary ls = summarize_left(g, sets[l], n);
        const SideSummary rs = summarize_right(g, sets[r], n);
        if (classify(g, n, sets[l], sets[r], ls, rs, v) != Verdict::New) continue;
        std::vector<GameRef> lrefs, rrefs;
        for (auto i : sets[l]) lrefs.push_back(g.refs[i]);
        for (auto i : sets[r]) rrefs.push_back(g.refs[i]);
        add_value(g, store.composite(lrefs, rrefs), sets[l], sets[r], false, round, v);
        ++added;
        if (g.size() >= budget.max_values) {
          reason = StopReason::MaxValues;
          stopped = true;
          break;
        }
      }
      if (stopped) break;
    }
    counts.push_back(g.size());
    if (stopped) break;
    if (added == 0) {
      reason = StopReason::Saturated;
      break;
    }
    if (out_of_time()) {
      reason = StopReason::TimeLimit;
      break;
    }
  }

  ValueTable table = to_table(g);
  table.counts_per_round = std::move(counts);
  table.stop_reason = reason;
  table.saturated = reason == StopReason::Saturated;
  return table;
}

}  // namespace pgames
