#include "posetgames/generators.hpp"

#include <vector>

namespace pgames {

namespace {

bool is_leaf(std::mt19937_64& rng, const RandomGameShape& shape, int depth, bool root) {
  if (depth <= 0) return true;
  if (root) return false;
  return std::bernoulli_distribution(shape.leaf_probability)(rng);
}

int option_count(std::mt19937_64& rng, const RandomGameShape& shape) {
  return std::uniform_int_distribution<int>(1, std::max(1, shape.max_options))(rng);
}

GameRef any_game(TermStore& store, std::mt19937_64& rng, const RandomGameShape& shape, int depth, bool root) {
  if (is_leaf(rng, shape, depth, root)) {
    std::uniform_int_distribution<std::size_t> pick(0, store.poset().size() - 1);
    return store.atom_game(store.poset().atom(pick(rng)));
  }
  std::vector<GameRef> left, right;
  for (int i = option_count(rng, shape); i > 0; --i) left.push_back(any_game(store, rng, shape, depth - 1, false));
  for (int i = option_count(rng, shape); i > 0; --i) right.push_back(any_game(store, rng, shape, depth - 1, false));
  return store.composite(left, right);
}

GameRef in_class(TermStore& store, std::mt19937_64& rng, const RandomGameShape& shape, int mean, int depth, bool root) {
  if (is_leaf(rng, shape, depth, root)) return store.atom(mean);
  std::vector<GameRef> left, right;
  for (int i = option_count(rng, shape); i > 0; --i) left.push_back(in_class(store, rng, shape, mean + 1, depth - 1, false));
  for (int i = option_count(rng, shape); i > 0; --i) right.push_back(in_class(store, rng, shape, mean - 1, depth - 1, false));
  return store.composite(left, right);
}

}  // namespace

GameRef random_game(TermStore& store, std::mt19937_64& rng, const RandomGameShape& shape) {
  return any_game(store, rng, shape, shape.max_depth, shape.composite_root);
}

GameRef random_in_class_game(TermStore& store, std::mt19937_64& rng, int mean, const RandomGameShape& shape) {
  return in_class(store, rng, shape, mean, shape.max_depth, shape.composite_root);
}

}  // namespace pgames
