#include "qpd/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "qpd/error.hpp"
#include "qpd/lattice.hpp"
#include "qpd/transform.hpp"

namespace qpd {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void for_each_canonical_permutation(
    int n, const std::function<void(const CanonicalPermutation&)>& visit) {
  if (n < 2) {
    throw DiagramError(ErrorKind::MalformedDocument,
                       "a diagram needs at least 2 elements");
  }
  CanonicalPermutation p;
  p.perm.resize(n - 2);
  std::iota(p.perm.begin(), p.perm.end(), 1);
  do {
    visit(p);
  } while (std::next_permutation(p.perm.begin(), p.perm.end()));
}

std::vector<Diagram> enumerate_quasiplanar(int n) {
  std::vector<Diagram> out;
  for_each_canonical_permutation(
      n, [&](const CanonicalPermutation& p) { out.push_back(from_canonical(p)); });
  return out;
}

std::uint64_t count_quasiplanar(int n) {
  std::uint64_t count = 0;
  for_each_canonical_permutation(n, [&](const CanonicalPermutation& p) {
    from_canonical(p);
    ++count;
  });
  return count;
}

namespace {

// Backtracking bijection search. Elements of `a` are assigned in index order;
// every new assignment is checked against all earlier ones.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Poset& a, const Poset& b, const Diagram* da,
                    const Diagram* db)
      : a_(a), b_(b), da_(da), db_(db), n_(a.size()),
        map_(n_, -1), used_(n_, false) {}

  std::optional<std::vector<int>> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool compatible(int x, int y) const {
    if (a_.up(x).count() != b_.up(y).count() ||
        a_.down(x).count() != b_.down(y).count()) {
      return false;
    }
    for (int u = 0; u < x; ++u) {
      const int v = map_[u];
      if (a_.leq(u, x) != b_.leq(v, y) || a_.leq(x, u) != b_.leq(y, v)) return false;
      if (da_ && (da_->left(u, x) != db_->left(v, y) ||
                  da_->left(x, u) != db_->left(y, v))) {
        return false;
      }
    }
    return true;
  }

  bool extend(int x) {
    if (x == n_) return true;
    for (int y = 0; y < n_; ++y) {
      if (used_[y] || !compatible(x, y)) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(x + 1)) return true;
      used_[y] = false;
      map_[x] = -1;
    }
    return false;
  }

  const Poset& a_;
  const Poset& b_;
  const Diagram* da_;
  const Diagram* db_;
  int n_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

bool transitive(const std::vector<ElementSet>& up) {
  for (std::size_t x = 0; x < up.size(); ++x) {
    for (int y : members(up[x])) {
      if (!up[y].is_subset_of(up[x])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_similarity(const Diagram& a, const Diagram& b) {
  return IsomorphismSearch(a.order(), b.order(), &a, &b).run();
}

std::optional<std::vector<int>> find_order_isomorphism(const Poset& a, const Poset& b) {
  return IsomorphismSearch(a, b, nullptr, nullptr).run();
}

std::vector<Diagram> oracle_enumerate(int n) {
  if (n > 6) {
    throw DiagramError(ErrorKind::SizeTooLarge,
                       "oracle enumeration is limited to n <= 6");
  }
  if (n < 2) {
    throw DiagramError(ErrorKind::MalformedDocument,
                       "a diagram needs at least 2 elements");
  }
  const int top = n - 1;
  std::vector<Pair> interior_pairs;
  for (int i = 1; i < top; ++i) {
    for (int j = i + 1; j < top; ++j) interior_pairs.emplace_back(i, j);
  }

  std::vector<Diagram> reps;
  // Each interior pair is unrelated (0), i < j (1) or j < i (2).
  std::vector<int> relation(interior_pairs.size(), 0);
  const std::uint64_t orders = [&] {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < interior_pairs.size(); ++i) c *= 3;
    return c;
  }();
  for (std::uint64_t code = 0; code < orders; ++code) {
    std::uint64_t rest = code;
    std::vector<ElementSet> up(n, ElementSet(n));
    for (int x = 0; x < n; ++x) {
      up[x].set(x);
      up[x].set(top);
      up[0].set(x);
    }
    for (const auto& [i, j] : interior_pairs) {
      const int r = static_cast<int>(rest % 3);
      rest /= 3;
      if (r == 1) up[i].set(j);
      if (r == 2) up[j].set(i);
    }
    if (!transitive(up)) continue;
    const Poset order = Poset::from_up_sets(up);

    std::vector<Pair> free_pairs;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (order.incomparable(x, y)) free_pairs.emplace_back(x, y);
      }
    }
    for (std::uint64_t mask = 0; mask < (1ULL << free_pairs.size()); ++mask) {
      std::vector<ElementSet> left(n, ElementSet(n));
      for (std::size_t k = 0; k < free_pairs.size(); ++k) {
        const auto [x, y] = free_pairs[k];
        if (mask >> k & 1ULL) {
          left[y].set(x);
        } else {
          left[x].set(y);
        }
      }
      std::optional<Diagram> d;
      try {
        d = Diagram::create(order, std::move(left));
      } catch (const DiagramError&) {
        continue;
      }
      const bool known = std::any_of(reps.begin(), reps.end(), [&](const Diagram& r) {
        return find_similarity(*d, r).has_value();
      });
      if (!known) reps.push_back(std::move(*d));
    }
  }
  return reps;
}

std::optional<std::pair<Diagram, Diagram>> find_order_isomorphic_dissimilar_pair(int n) {
  const auto all = enumerate_quasiplanar(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!find_order_isomorphism(all[i].order(), all[j].order())) continue;
      const Diagram la = beta2(all[i]).diagram;
      const Diagram lb = beta2(all[j]).diagram;
      if (!find_order_isomorphism(la.order(), lb.order())) {
        return std::make_pair(all[i], all[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace qpd
