#pragma once

#include <random>

#include "posetgames/term_store.hpp"

namespace pgames {

struct RandomGameShape {
  int max_depth = 3;
  int max_options = 2;
  /// Chance that a node above depth 0 is a leaf anyway.
  double leaf_probability = 0.3;
  /// Never return a bare atom when max_depth > 0.
  bool composite_root = false;
};

/// Uniform-ish random game: leaves are uniformly chosen atoms.
GameRef random_game(TermStore& store, std::mt19937_64& rng, const RandomGameShape& shape);

/// Random game whose every play scores (#Left moves - #Right moves) + mean.
/// Left options have mean + 1 and right options mean - 1, so the poset must
/// contain every label in [mean - max_depth, mean + max_depth].
GameRef random_in_class_game(TermStore& store, std::mt19937_64& rng, int mean, const RandomGameShape& shape);

}  // namespace pgames
