#pragma once

#include <vector>

#include "qpd/diagram.hpp"
#include "qpd/poset.hpp"

namespace qpd {

// Operation tables and distinguished subsets of a finite lattice.
//   jir    : join-irreducible elements (exactly one lower cover; excludes 0)
//   mir    : meet-irreducible elements (exactly one upper cover; excludes 1)
//   nar    : narrows, the elements comparable with every element, ascending
//   upstar : x -> join of the upper covers of x (upstar[top] = top)
struct LatticeTables {
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  std::vector<int> jir;
  std::vector<int> mir;
  std::vector<int> nar;
  std::vector<int> upstar;
  int bottom = 0;
  int top = 0;

  int size() const { return static_cast<int>(meet.size()); }
  bool is_mir(int x) const;
  bool is_jir(int x) const;
};

// Throws NotALattice naming a pair without a join or meet.
LatticeTables lattice_tables(const Poset& order);
inline LatticeTables lattice_tables(const Diagram& d) {
  return lattice_tables(d.order());
}

bool is_lattice(const Poset& order);

// a ∧ b ≺ a implies b ≺ a ∨ b. Throws NotALattice.
bool is_semimodular(const Poset& order);
// No three pairwise incomparable join-irreducibles. Throws NotALattice.
bool is_slim(const Poset& order);
// Every interval [x, upstar(x)] is distributive. Throws NotALattice.
bool is_join_distributive(const Poset& order);
// Lattice, semimodular and slim; never throws.
bool is_slim_semimodular(const Poset& order);

inline bool is_semimodular(const Diagram& d) { return is_semimodular(d.order()); }
inline bool is_slim(const Diagram& d) { return is_slim(d.order()); }
inline bool is_join_distributive(const Diagram& d) {
  return is_join_distributive(d.order());
}
inline bool is_slim_semimodular(const Diagram& d) {
  return is_slim_semimodular(d.order());
}

// Left/right supports (largest elements of the boundary chains below x) and
// left/right dual supports (leftmost/rightmost minimal meet-irreducible above
// x; both equal the top for x = top).
struct SupportData {
  std::vector<int> lsp;
  std::vector<int> rsp;
  std::vector<int> lds;
  std::vector<int> rds;
};

// Throws NotSlimSemimodular.
SupportData supports(const Diagram& d);

// All sets X ⊆ Mir with x = ⋀X irredundantly, by exhaustive search over the
// subsets of Mir. Each set is returned sorted.
std::vector<std::vector<int>> irredundant_meet_representations(
    const LatticeTables& t, int x);

// Lattice isomorphism of two slim semimodular diagrams via their narrows
// decomposition: blocks must agree up to similarity or mirroring.
// Throws NotSlimSemimodular.
bool lattice_isomorphic(const Diagram& a, const Diagram& b);

// The unique diagram of a slim semimodular lattice whose boundary chains are
// `left_chain` and `right_chain`. Throws NotSlimSemimodular, NotAMaximalChain
// or ChainsDoNotCoverJir.
Diagram diagram_from_chains(const Poset& order, const Chain& left_chain,
                            const Chain& right_chain);

}  // namespace qpd
