#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetgames/relations.hpp"
#include "posetgames/term_store.hpp"

namespace pgames {

/// The sequence G_0 = 0, G_{n+1} = M(P^(n)(G_n)) over a chain containing
/// the labels -3..1, together with its building blocks
///
///   star = <-1 | -3>,  M(G) = <1 | G>,  P(G) = <G | -2>,  P*(G) = <G | star>,
///
/// where P^(n) is P for odd n and P* for even n.
class GameSequence {
 public:
  /// Throws GameError if the store's poset lacks any of -3, -2, -1, 0, 1.
  explicit GameSequence(TermStore& store);

  GameRef star() const { return star_; }
  GameRef M(GameRef g) const;
  GameRef P(GameRef g) const;
  GameRef Pstar(GameRef g) const;
  GameRef Pn(std::uint32_t n, GameRef g) const;
  /// G_n; terms are memoized so repeated calls are cheap.
  GameRef G(std::uint32_t n);

  TermStore& store() const { return store_; }

 private:
  TermStore& store_;
  GameRef one_, zero_, minus_one_, minus_two_, minus_three_, star_;
  std::vector<GameRef> seq_;
};

/// C such that every play of g ends with score (#Left moves - #Right moves)
/// + C, or nullopt if no such constant exists. Atoms need integer labels, so
/// this is the atom's label for atomic games.
using MeanValue = std::optional<int>;
MeanValue mean_value(const TermStore& store, GameRef g);

/// Outcome of evaluating one asserted relation for one n.
struct ClaimReport {
  enum class Status { Pass, Fail, Skipped };

  std::string claim;  // "1".."8" for the numbered claims, else a named fact
  std::uint32_t n = 0;
  bool expected = false;
  std::optional<bool> actual;  // empty when the claim's guard fails
  std::int64_t micros = 0;

  Status status() const {
    if (!actual) return Status::Skipped;
    return *actual == expected ? Status::Pass : Status::Fail;
  }
  bool ok() const { return status() != Status::Fail; }
  /// One JSON object: {claim, n, expected, actual, ok, skipped, micros}.
  std::string to_json_line() const;
};

struct VerifyOptions {
  std::uint32_t n_max = 10;
  /// Flip every expected value; used to self-test that failures surface.
  bool negate_expectations = false;
};

/// The eight claims that together give G_{n+1} !<= G_n:
///  (1) G_n !<| -1                       (2) P^(n)(G_n) !<= -1
///  (3) n even: P^(n)(G_n) !<| -2        (4) n odd: P^(n)(G_n) !<| star
///  (5) n > 0: P^(n)(G_n) !<= P^(n-1)(G_{n-1})
///  (6) n > 0: G_{n+1} !<= G_{n-1}       (7) n > 0: G_{n+1} !<| P^(n-1)(G_{n-1})
///  (8) G_{n+1} !<= G_n
/// Claims whose guard fails are reported as skipped.
std::vector<ClaimReport> verify_claims(GameSequence& seq, const Relations& rel, const VerifyOptions& opts);

/// The supporting facts for every n <= n_max: "monotone" G_n is monotone,
/// "step_leq" G_n <= G_{n+1}, "above_zero" 0 <= G_n, "step_lt" G_n < G_{n+1}.
std::vector<ClaimReport> verify_lemmas(GameSequence& seq, const Relations& rel, const VerifyOptions& opts);

}  // namespace pgames
