#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "posetgames/term_store.hpp"

namespace pgames {

enum class Relation : std::uint8_t { Leq = 0, Tri = 1 };

/// Thread-safe memo of relation results keyed by (game, game, relation).
/// Concurrent writers may store the same key twice; the value never differs.
class RelationCache {
 public:
  std::optional<bool> find(Relation rel, GameRef g, GameRef h) const;
  void store(Relation rel, GameRef g, GameRef h, bool value);
  std::size_t size() const;
  void clear();

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::uint64_t, bool> map;
  };
  static std::uint64_t key(Relation rel, GameRef g, GameRef h) {
    return (std::uint64_t{g.index} << 32) | (std::uint64_t{h.index} << 1) | static_cast<std::uint64_t>(rel);
  }
  Shard& shard(std::uint64_t k) const { return shards_[(k * 0x9E3779B97F4A7C15ULL) >> 58]; }

  mutable std::array<Shard, kShards> shards_;
};

/// The order relations on games over a poset:
///
///   G <= H  iff  every G^L satisfies G^L <| H, every H^R satisfies G <| H^R,
///                and G <| H whenever G or H is atomic;
///   G <| H  iff  some G^R <= H, or some H^L with G <= H^L, or G = [a],
///                H = [b] with a <= b.
///
/// Evaluation uses an explicit stack, so arbitrarily deep terms are fine.
/// Every recursive call strictly shrinks |G| + |H| except the single
/// LEQ(G,H) -> TRI(G,H) step, which cannot repeat; meeting a query that is
/// still in flight is therefore reported as std::logic_error.
class Relations {
 public:
  explicit Relations(const TermStore& store) : store_(store) {}

  bool leq(GameRef g, GameRef h) const { return evaluate(Relation::Leq, g, h); }
  bool tri(GameRef g, GameRef h) const { return evaluate(Relation::Tri, g, h); }
  bool equivalent(GameRef g, GameRef h) const { return leq(g, h) && leq(h, g); }
  bool strictly_less(GameRef g, GameRef h) const { return leq(g, h) && !leq(h, g); }

  /// G <= G^L for every left option and G^R <= G for every right option.
  bool is_locally_monotone(GameRef g) const;
  /// Every position of g is locally monotone.
  bool is_monotone(GameRef g) const;

  const TermStore& store() const { return store_; }
  RelationCache& cache() const { return cache_; }

 private:
  bool evaluate(Relation rel, GameRef g, GameRef h) const;

  const TermStore& store_;
  mutable RelationCache cache_;
};

}  // namespace pgames
