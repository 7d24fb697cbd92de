#include "qpd/error.hpp"

#include <utility>

namespace qpd {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::LeftIncomplete: return "LeftIncomplete";
    case ErrorKind::LeftOnComparable: return "LeftOnComparable";
    case ErrorKind::NotLinearizable: return "NotLinearizable";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotSlimSemimodular: return "NotSlimSemimodular";
    case ErrorKind::NotAMaximalChain: return "NotAMaximalChain";
    case ErrorKind::ChainsDoNotCoverJir: return "ChainsDoNotCoverJir";
    case ErrorKind::InvalidGroundElement: return "InvalidGroundElement";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
  }
  return "Unknown";
}

DiagramError::DiagramError(ErrorKind kind, const std::string& message,
                           std::string location)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message),
      kind_(kind),
      location_(std::move(location)) {}

}  // namespace qpd
