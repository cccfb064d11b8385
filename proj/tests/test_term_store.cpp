#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "posetgames/term_store.hpp"
#include "support/oracles.hpp"

using namespace pgames;

TEST_CASE("linear_order labels and order") {
  const Poset l5 = Poset::linear_order(5);
  CHECK(std::vector<int>(l5.labels().begin(), l5.labels().end()) == std::vector<int>{-3, -2, -1, 0, 1});
  for (std::size_t i = 0; i + 1 < l5.size(); ++i) {
    CHECK(l5.le(l5.atom(i), l5.atom(i + 1)));
    CHECK_FALSE(l5.le(l5.atom(i + 1), l5.atom(i)));
  }
  CHECK(l5.name() == "L5");

  const Poset l1 = Poset::linear_order(1);
  REQUIRE(l1.size() == 1);
  CHECK(l1.labels()[0] == 1);
  CHECK(l1.le(l1.atom(0), l1.atom(0)));

  const Poset l4 = Poset::linear_order(4);
  int comparable = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (l4.le(l4.atom(i), l4.atom(j)) || l4.le(l4.atom(j), l4.atom(i))) ++comparable;
  CHECK(comparable == 16);
  CHECK(l4.labels()[0] == -2);

  const Poset l7 = Poset::linear_order(7);
  CHECK(l7.labels()[0] == -5);
  CHECK(l7.labels()[6] == 1);

  CHECK_THROWS_AS(Poset::linear_order(0), std::invalid_argument);
}

TEST_CASE("poset axioms are checked") {
  using M = std::vector<std::vector<bool>>;
  CHECK_THROWS_AS(Poset({0, 1}, M{{false, true}, {false, true}}), std::invalid_argument);  // not reflexive
  CHECK_THROWS_AS(Poset({0, 1}, M{{true, true}, {true, true}}), std::invalid_argument);    // not antisymmetric
  CHECK_THROWS_AS(Poset({0, 1, 2}, M{{true, true, false}, {false, true, true}, {false, false, true}}),
                  std::invalid_argument);  // not transitive
  CHECK_THROWS_AS(Poset({0, 0}, M{{true, false}, {false, true}}), std::invalid_argument);  // duplicate label
  const Poset antichain({0, 1}, M{{true, false}, {false, true}});
  CHECK_FALSE(antichain.is_chain());
}

TEST_CASE("poset specs") {
  CHECK(Poset::from_spec("L3").size() == 3);
  CHECK_THROWS_AS(Poset::from_spec("L0"), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_spec("X5"), std::invalid_argument);
  CHECK_THROWS_AS(Poset::from_spec("L5x"), std::invalid_argument);
}

TEST_CASE("atom games are hash-consed") {
  TermStore store(Poset::linear_order(5));
  CHECK(store.atom(0) == store.atom(0));
  CHECK(store.atom(0) != store.atom(1));
  std::set<GameRef> atoms;
  for (int l = -3; l <= 1; ++l) atoms.insert(store.atom(l));
  CHECK(atoms.size() == 5);
  CHECK(store.is_atomic(store.atom(-3)));
  CHECK(store.size(store.atom(-3)) == 1);
  CHECK(store.depth(store.atom(-3)) == 0);

  const Poset other = Poset::linear_order(5);
  CHECK_THROWS_AS(store.atom_game(other.atom(0)), GameError);
  CHECK_THROWS_AS(store.atom(7), GameError);
}

TEST_CASE("composite games") {
  TermStore store(Poset::linear_order(5));
  const GameRef m1 = store.atom(-1), m3 = store.atom(-3), zero = store.atom(0), one = store.atom(1);
  const GameRef star = store.composite({m1}, {m3});
  CHECK_FALSE(store.is_atomic(star));
  CHECK(store.left(star).size() == 1);
  CHECK(store.left(star)[0] == m1);
  CHECK(store.right(star)[0] == m3);
  CHECK(store.size(star) == 3);
  CHECK(store.depth(star) == 1);

  CHECK(store.composite({zero, zero}, {one}) == store.composite({zero}, {one}));
  CHECK(store.composite({one, zero}, {one}) == store.composite({zero, one}, {one}));
  CHECK(store.composite({zero}, {one}) != store.composite({one}, {zero}));

  CHECK_THROWS_AS(store.composite({}, {zero}), GameError);
  CHECK_THROWS_AS(store.composite({zero}, {}), GameError);

  TermStore other(Poset::linear_order(5));
  CHECK_THROWS_AS(store.composite({other.atom(0)}, {zero}), GameError);
  CHECK_THROWS_AS(store.term(other.atom(0)), GameError);
}

TEST_CASE("positions") {
  TermStore store(Poset::linear_order(5));
  const GameRef zero = store.atom(0), one = store.atom(1), m1 = store.atom(-1), m3 = store.atom(-3);
  CHECK(store.positions(zero) == std::vector<GameRef>{zero});

  const GameRef star = store.composite({m1}, {m3});
  auto ps = store.positions(star);
  CHECK(std::set<GameRef>(ps.begin(), ps.end()) == std::set<GameRef>{star, m1, m3});

  // G1 = <1 | <0 | star>>
  const GameRef inner = store.composite({zero}, {star});
  const GameRef g1 = store.composite({one}, {inner});
  ps = store.positions(g1);
  CHECK(ps.size() == 7);
  CHECK(std::set<GameRef>(ps.begin(), ps.end()) == std::set<GameRef>{g1, one, inner, zero, star, m1, m3});
  CHECK(std::is_sorted(ps.begin(), ps.end()));
}

namespace {

struct Built {
  GameRef ref;
  testing::TreePtr tree;
  int depth = 0;
};

}  // namespace

TEST_CASE("hash-consing agrees with structural equality on random constructions") {
  std::mt19937_64 rng(20261016);
  for (int run = 0; run < 20; ++run) {
    TermStore store(Poset::linear_order(3));
    std::vector<Built> built;
    // Options are drawn from shallow games only; the tree oracle compares
    // without sharing and is exponential in depth.
    auto pick = [&] {
      for (;;) {
        const Built& b = built[std::uniform_int_distribution<std::size_t>(0, built.size() - 1)(rng)];
        if (b.depth < 3) return b;
      }
    };
    for (int step = 0; step < 120; ++step) {
      if (built.empty() || std::bernoulli_distribution(0.2)(rng)) {
        const int label = std::uniform_int_distribution<int>(-1, 1)(rng);
        auto t = std::make_shared<testing::Tree>();
        t->label = label;
        built.push_back({store.atom(label), t});
        continue;
      }
      std::vector<GameRef> l, r;
      auto t = std::make_shared<testing::Tree>();
      int depth = 0;
      for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i > 0; --i) {
        const Built b = pick();
        l.push_back(b.ref);
        t->left.push_back(b.tree);
        depth = std::max(depth, b.depth + 1);
      }
      for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i > 0; --i) {
        const Built b = pick();
        r.push_back(b.ref);
        t->right.push_back(b.tree);
        depth = std::max(depth, b.depth + 1);
      }
      built.push_back({store.composite(l, r), t, depth});
    }
    for (std::size_t i = 0; i < built.size(); ++i)
      for (std::size_t j = 0; j < built.size(); ++j)
        REQUIRE((built[i].ref == built[j].ref) == testing::tree_equal(built[i].tree, built[j].tree));
  }
}

TEST_CASE("composite is invariant under permutation and duplication of options") {
  std::mt19937_64 rng(7);
  TermStore store(Poset::linear_order(4));
  std::vector<GameRef> pool;
  for (int l = -2; l <= 1; ++l) pool.push_back(store.atom(l));
  for (int i = 0; i < 30; ++i) pool.push_back(store.composite({pool[i % pool.size()]}, {pool[(i * 7 + 1) % pool.size()]}));

  for (int trial = 0; trial < 500; ++trial) {
    std::vector<GameRef> l, r;
    for (int i = std::uniform_int_distribution<int>(1, 4)(rng); i > 0; --i)
      l.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    for (int i = std::uniform_int_distribution<int>(1, 4)(rng); i > 0; --i)
      r.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    const GameRef g = store.composite(l, r);

    auto l2 = l, r2 = r;
    l2.push_back(l.front());
    r2.insert(r2.begin(), r.back());
    std::shuffle(l2.begin(), l2.end(), rng);
    std::shuffle(r2.begin(), r2.end(), rng);
    REQUIRE(store.composite(l2, r2) == g);
  }
}

TEST_CASE("positions contain every option of every member") {
  std::mt19937_64 rng(11);
  TermStore store(Poset::linear_order(5));
  std::vector<GameRef> pool;
  for (int l = -3; l <= 1; ++l) pool.push_back(store.atom(l));
  for (int i = 0; i < 200; ++i) {
    auto any = [&] { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
    pool.push_back(store.composite({any(), any()}, {any()}));
  }
  for (GameRef g : pool) {
    const auto ps = store.positions(g);
    REQUIRE(!ps.empty());
    REQUIRE(std::find(ps.begin(), ps.end(), g) != ps.end());
    const std::set<GameRef> members(ps.begin(), ps.end());
    REQUIRE(members.size() == ps.size());
    for (GameRef p : ps) {
      for (GameRef o : store.left(p)) REQUIRE(members.contains(o));
      for (GameRef o : store.right(p)) REQUIRE(members.contains(o));
    }
  }
}

TEST_CASE("lookups run concurrently with insertion") {
  TermStore store(Poset::linear_order(5));
  const GameRef zero = store.atom(0), one = store.atom(1);
  std::vector<GameRef> chain{zero};
  for (int i = 0; i < 100; ++i) chain.push_back(store.composite({one}, {chain.back()}));

  std::atomic<bool> stop{false};
  std::thread writer([&] {
    GameRef g = zero;
    for (int i = 0; i < 20000; ++i) g = store.composite({g}, {zero});
    stop = true;
  });
  std::size_t reads = 0;
  while (!stop) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
      REQUIRE(store.right(chain[i])[0] == chain[i - 1]);
      ++reads;
    }
  }
  writer.join();
  CHECK(reads > 0);
  CHECK(store.term_count() > 20000);
}
