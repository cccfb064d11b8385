#include "posetgames/normal_play.hpp"

#include <algorithm>

namespace pgames {

std::size_t NormalStore::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (std::uint32_t v : key) {
    h ^= v + 0x9e3779b9u + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

NormalStore::NormalStore() {
  nodes_.push_back(Node{});
  table_.emplace(std::vector<std::uint32_t>{0u}, 0u);
}

NormalRef NormalStore::make(std::span<const NormalRef> left, std::span<const NormalRef> right) {
  Node node{{left.begin(), left.end()}, {right.begin(), right.end()}};
  for (auto* side : {&node.left, &node.right}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
    for (NormalRef x : *side)
      if (x.index >= nodes_.size()) throw GameError("dangling normal-play handle");
  }
  std::vector<std::uint32_t> key;
  key.push_back(static_cast<std::uint32_t>(node.left.size()));
  for (NormalRef x : node.left) key.push_back(x.index);
  for (NormalRef x : node.right) key.push_back(x.index);
  if (auto it = table_.find(key); it != table_.end()) return NormalRef{it->second};

  const auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  table_.emplace(std::move(key), index);
  return NormalRef{index};
}

std::string NormalStore::print(NormalRef x) const {
  if (x == zero()) return "0";
  std::string out = "{";
  auto side = [&](std::span<const NormalRef> opts) {
    for (std::size_t i = 0; i < opts.size(); ++i) {
      if (i) out += ',';
      out += print(opts[i]);
    }
  };
  side(left(x));
  out += '|';
  side(right(x));
  out += '}';
  return out;
}

NormalRef NormalPlay::np(GameRef g) {
  for (GameRef p : store_.positions(g)) {
    if (image_.contains(p.index)) continue;
    const Term& t = store_.term(p);
    if (t.atomic) {
      image_.emplace(p.index, normal_.zero());
      continue;
    }
    std::vector<NormalRef> l, r;
    for (GameRef o : t.left) l.push_back(image_.at(o.index));
    for (GameRef o : t.right) r.push_back(image_.at(o.index));
    image_.emplace(p.index, normal_.make(l, r));
  }
  return image_.at(g.index);
}

bool NormalPlay::np_leq(NormalRef x, NormalRef y) {
  const std::uint64_t key = (std::uint64_t{x.index} << 32) | y.index;
  if (auto it = leq_cache_.find(key); it != leq_cache_.end()) return it->second;
  bool result = true;
  for (NormalRef xl : normal_.left(x)) {
    if (np_leq(y, xl)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (NormalRef yr : normal_.right(y)) {
      if (np_leq(yr, x)) {
        result = false;
        break;
      }
    }
  }
  leq_cache_.emplace(key, result);
  return result;
}

}  // namespace pgames
