#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "posetgames/poset.hpp"

namespace pgames {

/// Handle to a hash-consed game term. Two handles from the same store are
/// equal exactly when the terms are structurally identical.
struct GameRef {
  std::uint32_t store_id = 0;
  std::uint32_t index = 0;

  friend bool operator==(const GameRef&, const GameRef&) = default;
  friend auto operator<=>(const GameRef&, const GameRef&) = default;
};

struct GameRefHash {
  std::size_t operator()(const GameRef& g) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{g.store_id} << 32) | g.index);
  }
};

/// Raised when a game is built or compared against the wrong store, or an
/// option set is empty.
class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  bool atomic = false;
  Atom atom{};
  // Sorted by creation index, duplicate-free.
  std::vector<GameRef> left;
  std::vector<GameRef> right;
  // Tree size (saturating) and height; atoms have size 1 and depth 0.
  std::uint64_t size = 1;
  std::uint32_t depth = 0;
};

/// Append-only, deduplicated storage of games over one poset.
///
/// Every term only references terms created before it, so creation index is
/// a topological order of the term graph. Insertion takes an internal lock;
/// lookups of published handles are lock-free and may run concurrently with
/// insertion.
class TermStore {
 public:
  explicit TermStore(Poset poset);
  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;
  ~TermStore();

  const Poset& poset() const { return poset_; }
  std::uint32_t id() const { return id_; }

  GameRef atom_game(Atom a);
  /// Atomic game for the atom with the given label.
  GameRef atom(int label);
  GameRef composite(std::span<const GameRef> left, std::span<const GameRef> right);
  GameRef composite(std::initializer_list<GameRef> left, std::initializer_list<GameRef> right) {
    return composite(std::span<const GameRef>(left.begin(), left.size()),
                     std::span<const GameRef>(right.begin(), right.size()));
  }

  const Term& term(GameRef g) const;
  bool owns(GameRef g) const {
    return g.store_id == id_ && g.index < count_.load(std::memory_order_acquire);
  }
  void require_owned(GameRef g) const;

  bool is_atomic(GameRef g) const { return term(g).atomic; }
  std::span<const GameRef> left(GameRef g) const { return term(g).left; }
  std::span<const GameRef> right(GameRef g) const { return term(g).right; }

  /// g together with every option, option of an option, and so on; sorted
  /// by creation index so options always precede the positions using them.
  std::vector<GameRef> positions(GameRef g) const;

  std::uint64_t size(GameRef g) const { return term(g).size; }
  std::uint32_t depth(GameRef g) const { return term(g).depth; }
  std::size_t term_count() const { return count_.load(std::memory_order_acquire); }

 private:
  static constexpr std::size_t kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 16;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  GameRef intern(std::vector<std::uint32_t> key, Term term);
  Term& slot(std::uint32_t index) const;

  Poset poset_;
  std::uint32_t id_;
  std::unique_ptr<std::atomic<Term*>[]> chunks_;
  std::atomic<std::uint32_t> count_{0};
  std::mutex insert_mutex_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> table_;
};

}  // namespace pgames
