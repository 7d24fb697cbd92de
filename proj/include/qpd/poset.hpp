#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qpd/element_set.hpp"

namespace qpd {

using Pair = std::pair<int, int>;

// A finite partial order on {0..n-1}, stored as the full up-set and down-set
// of every element together with the cover (Hasse) relation.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of `pairs`. Throws NotAPartialOrder when the
  // pairs contain a cycle; the location names the first offending pair as
  // "/covers/<i>". Indices must already be in range.
  static Poset from_pairs(int n, std::span<const Pair> pairs);

  // `up[x]` must be the set {y : x <= y}. Verifies reflexivity, antisymmetry
  // and transitivity and throws NotAPartialOrder otherwise.
  static Poset from_up_sets(std::vector<ElementSet> up);

  int size() const { return static_cast<int>(up_.size()); }

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }
  bool covers(int lo, int hi) const;

  const ElementSet& up(int x) const { return up_[x]; }
  const ElementSet& down(int x) const { return down_[x]; }
  const std::vector<int>& upper_covers(int x) const { return upper_covers_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lower_covers_[x]; }

  // Sorted list of (lo, hi) with lo covered by hi.
  std::vector<Pair> cover_pairs() const;

  std::optional<int> minimum() const;
  std::optional<int> maximum() const;

  // Up-set generated by a set of elements.
  ElementSet up_closure(const ElementSet& set) const;
  std::vector<int> minimal_elements(const ElementSet& set) const;
  std::vector<int> maximal_elements(const ElementSet& set) const;

  // Induced order on `elems`; element i of the result is elems[i].
  Poset restrict(std::span<const int> elems) const;

  // Same order with every element renamed x -> mapping[x].
  Poset relabel(std::span<const int> mapping) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  explicit Poset(std::vector<ElementSet> up);

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<std::vector<int>> lower_covers_;
};

// First pair (in index order) without a least upper bound or a greatest
// lower bound, together with two distinct minimal upper (resp. maximal lower)
// bounds. Empty when the order is a lattice.
struct NonLatticeWitness {
  int x = 0;
  int y = 0;
  int bound_a = 0;
  int bound_b = 0;
  bool upper = true;
};

std::optional<NonLatticeWitness> find_non_lattice_witness(const Poset& order);

}  // namespace qpd
