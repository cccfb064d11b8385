#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "posetgames/relations.hpp"
#include "posetgames/term_store.hpp"

namespace pgames {

struct EnumerationBudget {
  std::uint32_t max_rounds = 64;
  std::size_t max_values = 100000;
  double time_limit_seconds = 600.0;
  /// Cap on (left, right) candidate pairs examined in one round.
  std::uint64_t max_candidates_per_round = 2'000'000'000ULL;
};

enum class OptionSets {
  /// Option sets are antichains of known values (dominated options dropped).
  Antichains,
  /// Every non-empty subset of known values; only for small value counts.
  AllSubsets,
};

struct EnumerationOptions {
  EnumerationBudget budget;
  OptionSets option_sets = OptionSets::Antichains;
};

enum class StopReason { Saturated, MaxRounds, MaxValues, TimeLimit, MaxCandidates };
std::string to_string(StopReason r);

/// Representatives of the monotone game values discovered so far, one per
/// equivalence class, in discovery order. Every option of a composite
/// representative is itself an earlier representative.
struct ValueTable {
  std::vector<GameRef> representatives;
  /// Round in which each representative appeared; atoms are round 0.
  std::vector<std::uint32_t> generation;
  /// leq[i][j] == representatives[i] <= representatives[j].
  std::vector<std::vector<bool>> leq;
  /// Total value count after each completed (or interrupted) round.
  std::vector<std::size_t> counts_per_round;
  bool saturated = false;
  StopReason stop_reason = StopReason::MaxRounds;

  std::size_t size() const { return representatives.size(); }
};

/// Saturates the set of monotone values over the store's poset. Each round
/// forms <L|R> from values of the previous rounds, keeps candidates that
/// are locally monotone and not equivalent to a known value, and stops when
/// a round adds nothing or the budget runs out. Candidate screening runs in
/// parallel; results do not depend on scheduling.
ValueTable enumerate_monotone_values(TermStore& store, const EnumerationOptions& opts);

/// Same procedure evaluated serially through Relations on materialised
/// terms. Kept as an independent check on the kernel above.
ValueTable enumerate_monotone_values_reference(TermStore& store, const Relations& rel, const EnumerationOptions& opts);

/// Hasse diagram of the table's order as (lower, upper) index pairs.
std::vector<std::pair<std::size_t, std::size_t>> value_poset_edges(const ValueTable& table);

/// Re-derives everything the table claims using a fresh relation cache.
/// Returns a list of problems; empty means the table is consistent.
std::vector<std::string> validate_table(const TermStore& store, const ValueTable& table);

/// {poset, counts_per_round, saturated, stop_reason, representatives, hasse_edges}
std::string table_to_json(const TermStore& store, const ValueTable& table);

struct DominationReport {
  std::uint64_t trials = 0;
  /// Printed (original, extended) pairs that were not equivalent.
  std::vector<std::pair<std::string, std::string>> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// Adding a left option G' <= G^L (or a right option H' >= G^R) to a game
/// must not change its value. Random composites up to `max_depth`.
DominationReport check_domination(TermStore& store, const Relations& rel, std::uint64_t trials, std::uint64_t seed,
                                  int max_depth = 2);

/// Every <a|b> with a, b games of depth <= 1, extended by every depth <= 1
/// game dominated by its left or right option.
DominationReport check_domination_exhaustive(TermStore& store, const Relations& rel);

}  // namespace pgames
