#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qpd/diagram.hpp"
#include "qpd/element_set.hpp"

namespace qpd {

// ---------------------------------------------------------------------------
// Lattice diagram -> quasiplanar diagram.

struct AlphaResult {
  Diagram diagram;
  // origin[i] is the element of the source lattice diagram that element i
  // stands for, or -1 for the freshly adjoined bottom.
  std::vector<int> origin;
};

// Restricts a slim semimodular lattice diagram to its meet-irreducibles plus
// the top and adjoins a new bottom. Element 0 of the result is the new
// bottom; the remaining elements follow in source index order.
// Throws NotSlimSemimodular.
AlphaResult alpha(const Diagram& lattice);

// ---------------------------------------------------------------------------
// Horizontally convex filters of a quasiplanar diagram Q. All sets below are
// over the element indices of Q and never contain Q's bottom.

// Nonempty up-set X of Q minus its bottom with x ⊏ y ⊏ z, x,z ∈ X => y ∈ X.
bool is_hco_filter(const Diagram& q, const ElementSet& set);

// A pair (x, y) of non-bottom elements with x = y or x left of y.
struct EligPair {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const EligPair&, const EligPair&) = default;
};

// All such pairs, sorted lexicographically.
std::vector<EligPair> elig_pairs(const Diagram& q);

// Min{z : x ⊑ z ⊑ y} for an eligible pair.
std::vector<int> min_between(const Diagram& q, int x, int y);

// Leftmost / rightmost element of the antichain Min(F).
int leftmost_bottom(const Diagram& q, const ElementSet& filter);
int rightmost_bottom(const Diagram& q, const ElementSet& filter);

struct FilterFamily {
  // Ordered from the largest filter (Q minus bottom) down to {top}: by
  // decreasing size, ties broken by ascending bitset value.
  std::vector<ElementSet> filters;
  // Greedy peelings: vec_f[0] = vec_g[0] = {top} and each step adds the
  // leftmost (resp. rightmost) maximal element outside the current filter,
  // recorded in f_peel / g_peel.
  std::vector<ElementSet> vec_f;
  std::vector<ElementSet> vec_g;
  std::vector<int> f_peel;
  std::vector<int> g_peel;

  // Index of `set` in `filters`, or -1.
  int index_of(const ElementSet& set) const;
};

FilterFamily enumerate_hco_filters(const Diagram& q);

// Least hco-filter containing `set`, as the intersection of every family
// member including it. Throws InvalidGroundElement if `set` contains the
// bottom or has the wrong universe size.
ElementSet hco_closure(const Diagram& q, const ElementSet& set);
ElementSet hco_closure(const Diagram& q, const FilterFamily& family,
                       const ElementSet& set);

// ---------------------------------------------------------------------------
// Quasiplanar diagram -> slim semimodular lattice diagram.

struct Beta1Result {
  Diagram diagram;
  std::vector<EligPair> pairs;  // element i of the diagram is pairs[i]
};

struct Beta2Result {
  Diagram diagram;
  FilterFamily family;  // element i of the diagram is family.filters[i]
};

// Lattice of eligible pairs:
//   (x1,y1) <= (x2,y2)  iff  x1 <=λ x2 and y1 <=ρ y2
//   (x1,y1) ⊏ (x2,y2)   iff  x1 <λ x2 and y2 <ρ y1
Beta1Result beta1(const Diagram& q);

// Lattice of hco-filters under reverse inclusion; the left relation is
// carried over from beta1 through X -> (leftmost_bottom X, rightmost_bottom X).
Beta2Result beta2(const Diagram& q);

struct PhiPsi {
  std::vector<EligPair> pairs;
  std::vector<ElementSet> filters;  // same order as the filter family
  std::vector<int> phi;  // pair index -> filter index (closure of {x, y})
  std::vector<int> psi;  // filter index -> pair index (extreme bottoms)
};

PhiPsi phi_psi(const Diagram& q);

// ---------------------------------------------------------------------------
// Antimatroid view: feasible sets are the complements of hco-filters inside
// Q minus {0, 1}.

struct Antimatroid {
  ElementSet ground;
  std::vector<ElementSet> feasible;  // complement of family.filters[i]
};

Antimatroid antimatroid_of(const Diagram& q);

// Descriptions of every failed antimatroid axiom; empty when all hold.
std::vector<std::string> antimatroid_violations(const Antimatroid& a);

// Mir of beta2(Q) computed by counting upper covers and as the principal
// filters of the interior elements of Q, plus the left-transport check
// x ⊏ y in Q  <=>  ↑x ⊏ ↑y in beta2(Q).
struct MirComparison {
  std::vector<ElementSet> by_covers;
  std::vector<ElementSet> by_principal;
  bool transport_holds = false;

  bool consistent() const { return by_covers == by_principal && transport_holds; }
};

MirComparison meet_irreducibles_of_beta2(const Diagram& q);

}  // namespace qpd
