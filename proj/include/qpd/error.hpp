#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpd {

enum class ErrorKind {
  MalformedDocument,
  NotAPartialOrder,
  NotBounded,
  LeftIncomplete,
  LeftOnComparable,
  NotLinearizable,
  NotALattice,
  NotSlimSemimodular,
  NotAMaximalChain,
  ChainsDoNotCoverJir,
  InvalidGroundElement,
  SizeTooLarge,
};

std::string_view error_name(ErrorKind kind);

// Every precondition or validation failure in the library is reported as a
// DiagramError. `location` is a JSON-pointer-style path into the input
// document ("/left/2") when the failure can be attributed to one entry.
class DiagramError : public std::runtime_error {
 public:
  DiagramError(ErrorKind kind, const std::string& message,
               std::string location = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::string location_;
};

}  // namespace qpd
