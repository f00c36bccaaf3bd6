#include "hardy/error.hpp"

namespace hardy {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotAZero: return "NotAZero";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

}  // namespace hardy
