#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qpd/diagram.hpp"

namespace qpd {

std::uint64_t factorial(int n);

// Visits the canonical permutation of every similarity class of n-element
// quasiplanar diagrams, in lexicographic order.
void for_each_canonical_permutation(
    int n, const std::function<void(const CanonicalPermutation&)>& visit);

// One diagram per similarity class, decoded from the canonical permutations
// in lexicographic order. Elements are numbered by lambda position.
std::vector<Diagram> enumerate_quasiplanar(int n);
std::uint64_t count_quasiplanar(int n);

// Independent brute force: every order on n labelled elements with bottom 0
// and top n-1, every orientation of its incomparable pairs, kept if valid and
// bucketed by explicit similarity search. One representative per class.
// Throws SizeTooLarge for n > 6.
std::vector<Diagram> oracle_enumerate(int n);

// Explicit similarity map a -> b found by backtracking, if any.
std::optional<std::vector<int>> find_similarity(const Diagram& a, const Diagram& b);
// Explicit order isomorphism a -> b found by backtracking, if any.
std::optional<std::vector<int>> find_order_isomorphism(const Poset& a, const Poset& b);

// Two n-element quasiplanar diagrams that are order-isomorphic but not
// similar and whose beta2 lattices are not isomorphic, if such a pair exists.
std::optional<std::pair<Diagram, Diagram>> find_order_isomorphic_dissimilar_pair(int n);

}  // namespace qpd
