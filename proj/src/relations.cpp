#include "posetgames/relations.hpp"

#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace pgames {

std::optional<bool> RelationCache::find(Relation rel, GameRef g, GameRef h) const {
  const auto k = key(rel, g, h);
  Shard& s = shard(k);
  std::lock_guard lock(s.mutex);
  if (auto it = s.map.find(k); it != s.map.end()) return it->second;
  return std::nullopt;
}

void RelationCache::store(Relation rel, GameRef g, GameRef h, bool value) {
  const auto k = key(rel, g, h);
  Shard& s = shard(k);
  std::lock_guard lock(s.mutex);
  s.map.emplace(k, value);
}

std::size_t RelationCache::size() const {
  std::size_t total = 0;
  for (auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    total += s.map.size();
  }
  return total;
}

void RelationCache::clear() {
  for (auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    s.map.clear();
  }
}

namespace {

struct Query {
  Relation rel;
  GameRef g;
  GameRef h;
};

struct Frame {
  Query q;
  std::size_t next = 0;
};

// LEQ is a conjunction and stops at the first false; TRI is a disjunction
// and stops at the first true.
bool short_circuits(Relation rel, bool child) { return rel == Relation::Leq ? !child : child; }

std::uint64_t flight_key(const Query& q) {
  return (std::uint64_t{q.g.index} << 32) | (std::uint64_t{q.h.index} << 1) | static_cast<std::uint64_t>(q.rel);
}

}  // namespace

bool Relations::evaluate(Relation rel, GameRef g, GameRef h) const {
  store_.require_owned(g);
  store_.require_owned(h);

  // Answers queries that need no frame: cached ones and TRI between atoms.
  auto resolve = [&](const Query& q) -> std::optional<bool> {
    if (auto hit = cache_.find(q.rel, q.g, q.h)) return hit;
    if (q.rel == Relation::Tri) {
      const Term& tg = store_.term(q.g);
      const Term& th = store_.term(q.h);
      if (tg.atomic && th.atomic) {
        bool r = store_.poset().le(tg.atom, th.atom);
        cache_.store(q.rel, q.g, q.h, r);
        return r;
      }
    }
    return std::nullopt;
  };

  // The i-th subquery of a frame, or nullopt once all are exhausted.
  auto subquery = [&](const Frame& f) -> std::optional<Query> {
    const Term& tg = store_.term(f.q.g);
    const Term& th = store_.term(f.q.h);
    std::size_t i = f.next;
    if (f.q.rel == Relation::Leq) {
      if (i < tg.left.size()) return Query{Relation::Tri, tg.left[i], f.q.h};
      i -= tg.left.size();
      if (i < th.right.size()) return Query{Relation::Tri, f.q.g, th.right[i]};
      i -= th.right.size();
      if (i == 0 && (tg.atomic || th.atomic)) return Query{Relation::Tri, f.q.g, f.q.h};
      return std::nullopt;
    }
    if (i < tg.right.size()) return Query{Relation::Leq, tg.right[i], f.q.h};
    i -= tg.right.size();
    if (i < th.left.size()) return Query{Relation::Leq, f.q.g, th.left[i]};
    // The atomic case of TRI is handled by resolve().
    return std::nullopt;
  };

  const Query root{rel, g, h};
  if (auto r = resolve(root)) return *r;

  std::vector<Frame> stack;
  std::unordered_set<std::uint64_t> in_flight;
  auto push = [&](const Query& q) {
    if (!in_flight.insert(flight_key(q)).second)
      throw std::logic_error("relation evaluation revisited an in-flight query");
    stack.push_back(Frame{q, 0});
  };

  push(root);
  bool result = false;
  bool returning = false;
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool done = false;
    if (returning) {
      returning = false;
      ++f.next;
      if (short_circuits(f.q.rel, result)) done = true;
    }
    while (!done) {
      auto sub = subquery(f);
      if (!sub) {
        result = f.q.rel == Relation::Leq;
        break;
      }
      auto known = resolve(*sub);
      if (!known) break;
      ++f.next;
      if (short_circuits(f.q.rel, *known)) {
        result = *known;
        done = true;
      }
    }
    if (!done && subquery(f)) {
      push(*subquery(f));
      continue;
    }
    // f is finished with `result`.
    cache_.store(f.q.rel, f.q.g, f.q.h, result);
    in_flight.erase(flight_key(f.q));
    stack.pop_back();
    returning = true;
  }
  return result;
}

bool Relations::is_locally_monotone(GameRef g) const {
  const Term& t = store_.term(g);
  for (GameRef gl : t.left)
    if (!leq(g, gl)) return false;
  for (GameRef gr : t.right)
    if (!leq(gr, g)) return false;
  return true;
}

bool Relations::is_monotone(GameRef g) const {
  for (GameRef p : store_.positions(g))
    if (!is_locally_monotone(p)) return false;
  return true;
}

}  // namespace pgames
