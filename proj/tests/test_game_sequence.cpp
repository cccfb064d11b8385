#include "doctest.h"

#include <random>
#include <set>

#include "json.hpp"
#include "posetgames/game_sequence.hpp"
#include "posetgames/generators.hpp"
#include "support/oracles.hpp"

using namespace pgames;

TEST_CASE("constructors") {
  TermStore store(Poset::linear_order(5));
  GameSequence seq(store);
  auto a = [&](int l) { return store.atom(l); };

  const GameRef star = seq.star();
  CHECK(star == store.composite({a(-1)}, {a(-3)}));
  CHECK(GameSequence(store).star() == star);
  CHECK(store.positions(star).size() == 3);

  CHECK(seq.M(a(0)) == store.composite({a(1)}, {a(0)}));
  CHECK(seq.P(a(0)) == store.composite({a(0)}, {a(-2)}));
  CHECK(seq.Pstar(a(0)) == store.composite({a(0)}, {star}));
  CHECK(seq.Pn(0, a(0)) == store.composite({a(0)}, {star}));
  CHECK(seq.Pn(1, seq.G(1)) == store.composite({seq.G(1)}, {a(-2)}));
  CHECK(seq.Pn(2, a(0)) == seq.Pstar(a(0)));
  CHECK(seq.Pn(7, a(0)) == seq.P(a(0)));
}

TEST_CASE("the sequence G_n") {
  TermStore store(Poset::linear_order(5));
  GameSequence seq(store);
  const GameRef zero = store.atom(0);
  CHECK(seq.G(0) == zero);
  CHECK(seq.G(1) == store.composite({store.atom(1)}, {store.composite({zero}, {seq.star()})}));
  CHECK(seq.G(2) == seq.M(seq.P(seq.M(seq.Pstar(zero)))));
  CHECK(seq.G(3) == seq.M(seq.Pstar(seq.M(seq.P(seq.M(seq.Pstar(zero)))))));

  // Each step adds M, P^(n) and one fresh atom (or star) leaf.
  std::uint64_t previous = store.size(seq.G(0));
  for (std::uint32_t n = 1; n <= 30; ++n) {
    const std::uint64_t size = store.size(seq.G(n));
    CHECK(size > previous);
    CHECK(size - previous <= 6);
    previous = size;
  }
}

TEST_CASE("the sequence needs the atoms -3..1") {
  TermStore small(Poset::linear_order(4));
  CHECK_THROWS_AS(GameSequence{small}, GameError);
  TermStore big(Poset::linear_order(8));
  CHECK_NOTHROW(GameSequence{big});
}

TEST_CASE("mean value examples") {
  TermStore store(Poset::linear_order(5));
  GameSequence seq(store);
  CHECK(mean_value(store, store.atom(-2)) == -2);
  CHECK(mean_value(store, seq.star()) == -2);
  CHECK_FALSE(mean_value(store, store.composite({store.atom(1)}, {store.atom(1)})).has_value());
  for (std::uint32_t n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(mean_value(store, seq.G(n)) == 0);
    CHECK(testing::every_play_matches_mean(store, seq.G(n), 0));
  }
}

TEST_CASE("mean value agrees with exhaustive play-out") {
  std::mt19937_64 rng(41);
  TermStore store(Poset::linear_order(9));
  const RandomGameShape any{3, 2, 0.3, false};
  const RandomGameShape in_class{3, 2, 0.3, false};
  int present = 0;
  for (int i = 0; i < 3000; ++i) {
    const bool from_class = i % 2 == 0;
    const int c = std::uniform_int_distribution<int>(-4, -2)(rng);
    const GameRef g = from_class ? random_in_class_game(store, rng, c, in_class) : random_game(store, rng, any);

    std::set<std::pair<int, int>> plays;
    testing::collect_plays(store, g, 0, plays);
    std::set<int> constants;
    for (auto [score, balance] : plays) constants.insert(score - balance);
    const MeanValue expected = constants.size() == 1 ? MeanValue(*constants.begin()) : std::nullopt;

    REQUIRE(mean_value(store, g) == expected);
    if (from_class) REQUIRE(mean_value(store, g) == c);
    if (expected) {
      ++present;
      REQUIRE(testing::every_play_matches_mean(store, g, *expected));
    }
  }
  CHECK(present > 1500);
}

TEST_CASE("mean value comparison and automatic monotonicity") {
  std::mt19937_64 rng(43);
  TermStore store(Poset::linear_order(11));
  const Relations rel(store);
  const RandomGameShape shape{4, 2, 0.3, false};
  for (int i = 0; i < 300; ++i) {
    const int cg = std::uniform_int_distribution<int>(-5, -3)(rng);
    const int ch = std::uniform_int_distribution<int>(-5, -3)(rng);
    const GameRef g = random_in_class_game(store, rng, cg, shape);
    const GameRef h = random_in_class_game(store, rng, ch, shape);
    if (cg <= ch) REQUIRE(rel.tri(g, h));
    if (cg < ch) REQUIRE(rel.leq(g, h));
    REQUIRE(rel.is_monotone(g));
  }
}

TEST_CASE("claim harness") {
  TermStore store(Poset::linear_order(5));
  GameSequence seq(store);
  const Relations rel(store);
  const auto reports = verify_claims(seq, rel, VerifyOptions{10, false});
  CHECK(reports.size() == 8 * 11);

  std::size_t skipped = 0;
  for (const auto& r : reports) {
    CAPTURE(r.claim);
    CAPTURE(r.n);
    CHECK(r.ok());
    if (r.status() == ClaimReport::Status::Skipped) ++skipped;
    const bool guarded = (r.claim == "3" && r.n % 2 == 1) || (r.claim == "4" && r.n % 2 == 0) ||
                         ((r.claim == "5" || r.claim == "6" || r.claim == "7") && r.n == 0);
    CHECK(guarded == !r.actual.has_value());
  }
  // (3) and (4) each skip half; (5)-(7) skip n = 0.
  CHECK(skipped == 11 + 3);

  const auto claim8_n0 = reports[7];
  CHECK(claim8_n0.claim == "8");
  CHECK(claim8_n0.n == 0);
  CHECK(claim8_n0.actual == false);
  CHECK(claim8_n0.actual == rel.leq(seq.G(1), seq.G(0)));

  for (const auto& r : verify_lemmas(seq, rel, VerifyOptions{10, false})) {
    CAPTURE(r.claim);
    CAPTURE(r.n);
    CHECK(r.status() == ClaimReport::Status::Pass);
  }
}

TEST_CASE("negated expectations surface as failures") {
  TermStore store(Poset::linear_order(5));
  GameSequence seq(store);
  const Relations rel(store);
  const auto reports = verify_claims(seq, rel, VerifyOptions{2, true});
  std::size_t failures = 0;
  for (const auto& r : reports)
    if (r.status() == ClaimReport::Status::Fail) ++failures;
  CHECK(failures > 0);
  for (const auto& r : reports) CHECK((r.status() == ClaimReport::Status::Fail) == r.actual.has_value());
}

TEST_CASE("claim reports serialize as JSON lines") {
  ClaimReport r;
  r.claim = "5";
  r.n = 3;
  r.expected = false;
  r.actual = false;
  r.micros = 12;
  auto j = nlohmann::json::parse(r.to_json_line());
  CHECK(j["claim"] == "5");
  CHECK(j["n"] == 3);
  CHECK(j["expected"] == false);
  CHECK(j["actual"] == false);
  CHECK(j["ok"] == true);
  CHECK(j["skipped"] == false);
  CHECK(j["micros"] == 12);

  r.actual.reset();
  j = nlohmann::json::parse(r.to_json_line());
  CHECK(j["actual"].is_null());
  CHECK(j["ok"].is_null());
  CHECK(j["skipped"] == true);
}
