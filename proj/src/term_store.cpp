#include "posetgames/term_store.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace pgames {

namespace {

std::uint32_t next_store_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::vector<GameRef> canonical(std::span<const GameRef> options) {
  std::vector<GameRef> out(options.begin(), options.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const auto max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

}  // namespace

std::size_t TermStore::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : key) {
    h ^= v;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

TermStore::TermStore(Poset poset)
    : poset_(std::move(poset)),
      id_(next_store_id()),
      chunks_(std::make_unique<std::atomic<Term*>[]>(kMaxChunks)) {
  for (std::size_t i = 0; i < kMaxChunks; ++i) chunks_[i].store(nullptr, std::memory_order_relaxed);
}

TermStore::~TermStore() {
  for (std::size_t i = 0; i < kMaxChunks; ++i) delete[] chunks_[i].load(std::memory_order_relaxed);
}

Term& TermStore::slot(std::uint32_t index) const {
  Term* chunk = chunks_[index >> kChunkBits].load(std::memory_order_acquire);
  return chunk[index & (kChunkSize - 1)];
}

const Term& TermStore::term(GameRef g) const {
  require_owned(g);
  return slot(g.index);
}

void TermStore::require_owned(GameRef g) const {
  if (g.store_id != id_) throw GameError("game belongs to a different term store");
  if (g.index >= count_.load(std::memory_order_acquire)) throw GameError("dangling game handle");
}

GameRef TermStore::intern(std::vector<std::uint32_t> key, Term term) {
  std::lock_guard lock(insert_mutex_);
  if (auto it = table_.find(key); it != table_.end()) return GameRef{id_, it->second};

  const std::uint32_t index = count_.load(std::memory_order_relaxed);
  const std::size_t chunk = index >> kChunkBits;
  if (chunk >= kMaxChunks) throw std::length_error("term store is full");
  if (chunks_[chunk].load(std::memory_order_relaxed) == nullptr)
    chunks_[chunk].store(new Term[kChunkSize], std::memory_order_release);
  slot(index) = std::move(term);
  table_.emplace(std::move(key), index);
  count_.store(index + 1, std::memory_order_release);
  return GameRef{id_, index};
}

GameRef TermStore::atom_game(Atom a) {
  if (!poset_.owns(a)) throw GameError("atom belongs to a different poset");
  Term t;
  t.atomic = true;
  t.atom = a;
  return intern({0u, a.index}, std::move(t));
}

GameRef TermStore::atom(int label) {
  auto a = poset_.find_label(label);
  if (!a) throw GameError("unknown atom label " + std::to_string(label) + " in " + poset_.name());
  return atom_game(*a);
}

GameRef TermStore::composite(std::span<const GameRef> left, std::span<const GameRef> right) {
  if (left.empty()) throw GameError("composite game needs a non-empty left option set");
  if (right.empty()) throw GameError("composite game needs a non-empty right option set");
  for (GameRef g : left) require_owned(g);
  for (GameRef g : right) require_owned(g);

  Term t;
  t.left = canonical(left);
  t.right = canonical(right);

  std::vector<std::uint32_t> key;
  key.reserve(2 + t.left.size() + t.right.size());
  key.push_back(1u);
  key.push_back(static_cast<std::uint32_t>(t.left.size()));
  std::uint64_t size = 1;
  std::uint32_t depth = 0;
  for (const auto* side : {&t.left, &t.right}) {
    for (GameRef g : *side) {
      key.push_back(g.index);
      const Term& child = slot(g.index);
      size = saturating_add(size, child.size);
      depth = std::max(depth, child.depth + 1);
    }
  }
  t.size = size;
  t.depth = depth;
  return intern(std::move(key), std::move(t));
}

std::vector<GameRef> TermStore::positions(GameRef g) const {
  require_owned(g);
  std::vector<GameRef> out;
  std::vector<GameRef> stack{g};
  std::unordered_set<std::uint32_t> seen{g.index};
  while (!stack.empty()) {
    GameRef cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    const Term& t = slot(cur.index);
    for (const auto* side : {&t.left, &t.right})
      for (GameRef o : *side)
        if (seen.insert(o.index).second) stack.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgames
