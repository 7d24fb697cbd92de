#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpd/diagram.hpp"

namespace qpd {

struct Witness {
  // Canonical permutation of the diagram under test.
  CanonicalPermutation perm;
  std::string detail;
  // The offending derived diagram, when it is not the subject itself.
  std::optional<RawDiagram> diagram;
};

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<Witness> witness;

  bool passed() const { return failures == 0; }
};

// Accumulates pass/fail counts per named property, keeping the first witness
// of each failure. Merging is associative; the smallest witness wins.
class PropertyLog {
 public:
  void record(std::string_view name, bool ok, const CanonicalPermutation& subject,
              const std::function<std::string()>& detail,
              std::optional<RawDiagram> diagram = std::nullopt);
  void merge(const PropertyLog& other);
  std::vector<PropertyResult> results() const;
  bool passed() const;

 private:
  std::map<std::string, PropertyResult, std::less<>> results_;
};

struct VerifyOptions {
  // Checks quantified over all maximal chains; expensive beyond n = 6.
  std::optional<bool> chain_properties;
  // Test hook applied to the raw form of every beta2(Q) before it is
  // re-validated.
  std::function<void(const CanonicalPermutation&, RawDiagram&)> corrupt_beta2;
};

struct EnumerationReport {
  int size = 0;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
  std::vector<PropertyResult> results;
  std::chrono::milliseconds elapsed{0};

  bool passed() const;
};

// Round-trip, filter, closure-law and transport checks for one quasiplanar
// diagram and its beta images. Includes check_lattice_properties on beta2(q).
void check_quasiplanar_properties(const Diagram& q, PropertyLog& log,
                                  const VerifyOptions& options = {});

// Support, dual-support, betweenness and round-trip checks for one slim
// semimodular lattice diagram.
void check_lattice_properties(const Diagram& d, const CanonicalPermutation& tag,
                              PropertyLog& log, bool chain_properties);

EnumerationReport verify_suite(int n, const VerifyOptions& options = {});

}  // namespace qpd
