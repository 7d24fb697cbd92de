#include "qpd/poset.hpp"

#include <algorithm>
#include <string>

#include "qpd/error.hpp"

namespace qpd {

Poset::Poset(std::vector<ElementSet> up) : up_(std::move(up)) {
  const int n = size();
  down_.assign(n, ElementSet(n));
  for (int x = 0; x < n; ++x) {
    for (int y : members(up_[x])) down_[y].set(x);
  }
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y : members(up_[x])) {
      if (y == x) continue;
      // x < y is a cover iff no z lies strictly between them.
      ElementSet between = up_[x] & down_[y];
      if (between.count() == 2) {
        upper_covers_[x].push_back(y);
        lower_covers_[y].push_back(x);
      }
    }
  }
  for (auto& c : lower_covers_) std::sort(c.begin(), c.end());
}

Poset Poset::from_pairs(int n, std::span<const Pair> pairs) {
  std::vector<ElementSet> up(n, ElementSet(n));
  for (int x = 0; x < n; ++x) up[x].set(x);
  for (const auto& [lo, hi] : pairs) up[lo].set(hi);
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (up[x].test(k)) up[x] |= up[k];
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [lo, hi] = pairs[i];
    if (up[hi].test(lo)) {
      throw DiagramError(ErrorKind::NotAPartialOrder,
                         "pair (" + std::to_string(lo) + "," +
                             std::to_string(hi) + ") lies on a cycle",
                         "/covers/" + std::to_string(i));
    }
  }
  return Poset(std::move(up));
}

Poset Poset::from_up_sets(std::vector<ElementSet> up) {
  const int n = static_cast<int>(up.size());
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(up[x].size()) != n || !up[x].test(x)) {
      throw DiagramError(ErrorKind::NotAPartialOrder,
                         "relation is not reflexive at " + std::to_string(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y : members(up[x])) {
      if (y != x && up[y].test(x)) {
        throw DiagramError(ErrorKind::NotAPartialOrder,
                           "antisymmetry fails for " + std::to_string(x) +
                               " and " + std::to_string(y));
      }
      if (!up[y].is_subset_of(up[x])) {
        throw DiagramError(ErrorKind::NotAPartialOrder,
                           "transitivity fails through " + std::to_string(y));
      }
    }
  }
  return Poset(std::move(up));
}

bool Poset::covers(int lo, int hi) const {
  const auto& c = upper_covers_[lo];
  return std::find(c.begin(), c.end(), hi) != c.end();
}

std::vector<Pair> Poset::cover_pairs() const {
  std::vector<Pair> out;
  for (int x = 0; x < size(); ++x) {
    for (int y : upper_covers_[x]) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> Poset::minimum() const {
  for (int x = 0; x < size(); ++x) {
    if (static_cast<int>(up_[x].count()) == size()) return x;
  }
  return std::nullopt;
}

std::optional<int> Poset::maximum() const {
  for (int x = 0; x < size(); ++x) {
    if (static_cast<int>(down_[x].count()) == size()) return x;
  }
  return std::nullopt;
}

ElementSet Poset::up_closure(const ElementSet& set) const {
  ElementSet out(size());
  for (int x : members(set)) out |= up_[x];
  return out;
}

std::vector<int> Poset::minimal_elements(const ElementSet& set) const {
  std::vector<int> out;
  for (int x : members(set)) {
    ElementSet below = down_[x] & set;
    if (below.count() == 1) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::maximal_elements(const ElementSet& set) const {
  std::vector<int> out;
  for (int x : members(set)) {
    ElementSet above = up_[x] & set;
    if (above.count() == 1) out.push_back(x);
  }
  return out;
}

Poset Poset::restrict(std::span<const int> elems) const {
  const int k = static_cast<int>(elems.size());
  std::vector<ElementSet> up(k, ElementSet(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (leq(elems[i], elems[j])) up[i].set(j);
    }
  }
  return from_up_sets(std::move(up));
}

Poset Poset::relabel(std::span<const int> mapping) const {
  const int n = size();
  std::vector<ElementSet> up(n, ElementSet(n));
  for (int x = 0; x < n; ++x) {
    for (int y : members(up_[x])) up[mapping[x]].set(mapping[y]);
  }
  return Poset(std::move(up));
}

namespace {

// Two distinct minimal elements of `bounds`, if the set has no least element.
std::optional<Pair> two_minimal(const Poset& order, const ElementSet& bounds) {
  auto mins = order.minimal_elements(bounds);
  if (mins.size() == 1) return std::nullopt;
  if (mins.empty()) return Pair{-1, -1};
  return Pair{mins[0], mins[1]};
}

std::optional<Pair> two_maximal(const Poset& order, const ElementSet& bounds) {
  auto maxs = order.maximal_elements(bounds);
  if (maxs.size() == 1) return std::nullopt;
  if (maxs.empty()) return Pair{-1, -1};
  return Pair{maxs[0], maxs[1]};
}

}  // namespace

std::optional<NonLatticeWitness> find_non_lattice_witness(const Poset& order) {
  const int n = order.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (auto w = two_minimal(order, order.up(x) & order.up(y))) {
        return NonLatticeWitness{x, y, w->first, w->second, true};
      }
      if (auto w = two_maximal(order, order.down(x) & order.down(y))) {
        return NonLatticeWitness{x, y, w->first, w->second, false};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qpd
