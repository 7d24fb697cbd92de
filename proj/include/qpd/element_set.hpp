#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

namespace qpd {

// Subset of the element indices {0..n-1} of a diagram.
using ElementSet = boost::dynamic_bitset<>;

inline std::vector<int> members(const ElementSet& set) {
  std::vector<int> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

inline ElementSet make_set(int n, const std::vector<int>& elems) {
  ElementSet set(static_cast<std::size_t>(n));
  for (int e : elems) set.set(static_cast<std::size_t>(e));
  return set;
}

inline std::string to_string(const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  for (int e : members(set)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace qpd
