#include "posetgames/poset.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace pgames {

namespace {

std::uint32_t next_poset_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Poset::Poset(std::vector<int> labels, std::vector<std::vector<bool>> le)
    : id_(next_poset_id()), labels_(std::move(labels)), le_(std::move(le)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("poset must have at least one atom");
  if (le_.size() != n) throw std::invalid_argument("order matrix has wrong shape");
  for (const auto& row : le_)
    if (row.size() != n) throw std::invalid_argument("order matrix has wrong shape");

  std::unordered_set<int> seen;
  for (int l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate atom label " + std::to_string(l));

  for (std::size_t i = 0; i < n; ++i) {
    if (!le_[i][i]) throw std::invalid_argument("order is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le_[i][j] && le_[j][i])
        throw std::invalid_argument("order is not antisymmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (le_[i][j] && le_[j][k] && !le_[i][k])
          throw std::invalid_argument("order is not transitive");
    }
  }
  name_ = "poset(" + std::to_string(n) + ")";
}

Poset Poset::linear_order(int n) {
  if (n < 1) throw std::invalid_argument("linear order needs n >= 1");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = 1 - (n - 1) + i;
  std::vector<std::vector<bool>> le(labels.size(), std::vector<bool>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j) le[i][j] = true;
  Poset p(std::move(labels), std::move(le));
  p.name_ = "L" + std::to_string(n);
  return p;
}

Poset Poset::from_spec(const std::string& spec) {
  if (spec.size() >= 2 && (spec[0] == 'L' || spec[0] == 'l')) {
    int n = 0;
    const char* first = spec.data() + 1;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n >= 1) return linear_order(n);
  }
  throw std::invalid_argument("unrecognized poset spec '" + spec + "' (expected L<n>, n >= 1)");
}

Atom Poset::atom(std::size_t index) const {
  if (index >= labels_.size()) throw std::out_of_range("atom index out of range");
  return Atom{id_, static_cast<std::uint32_t>(index)};
}

std::optional<Atom> Poset::find_label(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return Atom{id_, static_cast<std::uint32_t>(it - labels_.begin())};
}

int Poset::label(Atom a) const {
  if (!owns(a)) throw std::invalid_argument("atom belongs to a different poset");
  return labels_[a.index];
}

bool Poset::le(Atom a, Atom b) const {
  if (!owns(a) || !owns(b)) throw std::invalid_argument("atom belongs to a different poset");
  return le_[a.index][b.index];
}

bool Poset::is_chain() const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < labels_.size(); ++j)
      if (!le_[i][j] && !le_[j][i]) return false;
  return true;
}

}  // namespace pgames
