#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetgames/term_store.hpp"

namespace pgames {

struct NormalRef {
  std::uint32_t index = 0;
  friend bool operator==(const NormalRef&, const NormalRef&) = default;
  friend auto operator<=>(const NormalRef&, const NormalRef&) = default;
};

/// Hash-consed normal-play games. Unlike poset games, option sets may be
/// empty; zero = { | } always has index 0. Not thread-safe.
class NormalStore {
 public:
  NormalStore();

  NormalRef zero() const { return NormalRef{0}; }
  NormalRef make(std::span<const NormalRef> left, std::span<const NormalRef> right);
  std::span<const NormalRef> left(NormalRef x) const { return nodes_.at(x.index).left; }
  std::span<const NormalRef> right(NormalRef x) const { return nodes_.at(x.index).right; }
  std::size_t size() const { return nodes_.size(); }

  /// Brace form, e.g. "{0|{0|0}}"; zero prints as "0".
  std::string print(NormalRef x) const;

 private:
  struct Node {
    std::vector<NormalRef> left, right;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };
  std::vector<Node> nodes_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> table_;
};

/// Maps poset games to normal play by replacing every atom with zero, and
/// decides the normal-play order
///   X <= Y  iff  no X^L has Y <= X^L and no Y^R has Y^R <= X.
class NormalPlay {
 public:
  explicit NormalPlay(const TermStore& store) : store_(store) {}

  NormalRef np(GameRef g);
  bool np_leq(NormalRef x, NormalRef y);

  NormalStore& normal_store() { return normal_; }
  const NormalStore& normal_store() const { return normal_; }

 private:
  const TermStore& store_;
  NormalStore normal_;
  std::unordered_map<std::uint32_t, NormalRef> image_;
  std::unordered_map<std::uint64_t, bool> leq_cache_;
};

}  // namespace pgames
