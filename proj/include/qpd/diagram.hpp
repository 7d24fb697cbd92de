#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qpd/element_set.hpp"
#include "qpd/poset.hpp"

namespace qpd {

// Unvalidated input: an element count, candidate order pairs (usually the
// covers) and oriented "left of" pairs (l, r) meaning l is left of r.
struct RawDiagram {
  int n = 0;
  std::vector<Pair> covers;
  std::vector<Pair> left;
};

// A bounded finite order together with a left-to-right orientation of its
// incomparable pairs such that
//   leq_lambda = leq ∪ left   and   leq_rho = leq ∪ left^-1
// are linear orders. Their intersection is then leq, so the pair of linear
// orders is a realizer of the order. Instances are immutable and always valid.
class Diagram {
 public:
  // Validates `left` (left[x][y] set iff x is left of y) against `order`.
  // Throws NotBounded, LeftOnComparable, LeftIncomplete or NotLinearizable.
  static Diagram create(Poset order, std::vector<ElementSet> left);

  int size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return order_.leq(x, y); }
  bool less(int x, int y) const { return order_.less(x, y); }
  bool incomparable(int x, int y) const { return order_.incomparable(x, y); }
  bool left(int x, int y) const { return left_[x].test(y); }
  bool right(int x, int y) const { return left_[y].test(x); }
  // x = y or x is left of y.
  bool left_or_equal(int x, int y) const { return x == y || left(x, y); }

  // x <= y or x left of y; total order.
  bool leq_lambda(int x, int y) const { return leq(x, y) || left(x, y); }
  // x <= y or x right of y; total order.
  bool leq_rho(int x, int y) const { return leq(x, y) || right(x, y); }
  bool less_lambda(int x, int y) const { return x != y && leq_lambda(x, y); }
  bool less_rho(int x, int y) const { return x != y && leq_rho(x, y); }

  // Position of x in the leq_lambda (resp. leq_rho) linear order.
  int lambda_position(int x) const { return lambda_pos_[x]; }
  int rho_position(int x) const { return rho_pos_[x]; }

  const ElementSet& left_row(int x) const { return left_[x]; }

  // Sorted list of (l, r) with l left of r.
  std::vector<Pair> left_pairs() const;
  RawDiagram raw() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.order_ == b.order_ && a.left_ == b.left_;
  }

 private:
  Diagram() = default;

  Poset order_;
  std::vector<ElementSet> left_;
  std::vector<int> lambda_pos_;
  std::vector<int> rho_pos_;
  int bottom_ = 0;
  int top_ = 0;
};

struct Realizer {
  std::vector<int> lam_order;
  std::vector<int> rho_order;
  friend bool operator==(const Realizer&, const Realizer&) = default;
};

// perm[i-1] is the rho position of the element at lambda position i, for the
// interior positions 1..n-2. Equal canonical permutations <=> similar diagrams.
struct CanonicalPermutation {
  std::vector<int> perm;
  int size() const { return static_cast<int>(perm.size()) + 2; }
  friend auto operator<=>(const CanonicalPermutation&,
                          const CanonicalPermutation&) = default;
};

struct Chain {
  std::vector<int> elems;
  friend bool operator==(const Chain&, const Chain&) = default;
};

Diagram validate(const RawDiagram& raw);
Realizer realizer(const Diagram& d);
CanonicalPermutation canonical_form(const Diagram& d);
// Inverse of canonical_form: elements are numbered by lambda position.
Diagram from_canonical(const CanonicalPermutation& p);
bool similar(const Diagram& a, const Diagram& b);
Diagram mirror(const Diagram& d);
// (left boundary, right boundary). Throws NotALattice.
std::pair<Chain, Chain> boundary_chains(const Diagram& d);
// Some diagram on the given bounded order, or nullopt if it has dimension > 2.
std::optional<Diagram> order_dimension_le2(int n, std::span<const Pair> covers);

// Renames x -> mapping[x].
Diagram relabel(const Diagram& d, std::span<const int> mapping);
// Same diagram with elements numbered by lambda position.
Diagram canonical_relabel(const Diagram& d);
// Induced subdiagram on `elems` (element i is elems[i]). The subset must
// have a least and a greatest element.
Diagram subdiagram(const Diagram& d, std::span<const int> elems);
std::vector<Chain> maximal_chains(const Poset& order);

}  // namespace qpd
