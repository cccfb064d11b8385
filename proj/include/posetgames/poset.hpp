#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgames {

/// An outcome of a finished game. Only meaningful together with the Poset
/// that issued it; `poset_id` ties the two together.
struct Atom {
  std::uint32_t poset_id = 0;
  std::uint32_t index = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A finite partially ordered set of atoms with integer labels.
///
/// The order is given explicitly as a full relation matrix and is checked
/// for reflexivity, antisymmetry and transitivity at construction.
class Poset {
 public:
  /// `le[i][j]` states labels[i] <= labels[j]. Throws std::invalid_argument
  /// when the relation is not a partial order or labels repeat.
  Poset(std::vector<int> labels, std::vector<std::vector<bool>> le);

  /// Chain with n atoms. For n <= 5 the labels are the top n of
  /// -3 < -2 < -1 < 0 < 1; larger chains extend below -3.
  static Poset linear_order(int n);

  /// Parses "L<n>" (e.g. "L5").
  static Poset from_spec(const std::string& spec);

  std::uint32_t id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  std::string name() const { return name_; }

  Atom atom(std::size_t index) const;
  std::optional<Atom> find_label(int label) const;
  int label(Atom a) const;
  bool owns(Atom a) const { return a.poset_id == id_ && a.index < labels_.size(); }
  bool le(Atom a, Atom b) const;
  bool is_chain() const;

  std::span<const int> labels() const { return labels_; }

 private:
  std::uint32_t id_;
  std::vector<int> labels_;
  std::vector<std::vector<bool>> le_;
  std::string name_;
};

}  // namespace pgames
