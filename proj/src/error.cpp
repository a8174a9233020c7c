#include "specmom/error.hpp"

namespace specmom {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::SumNotOne: return "SumNotOne";
    case Errc::MeanNotZero: return "MeanNotZero";
    case Errc::P1NonZero: return "P1NonZero";
    case Errc::P0Zero: return "P0Zero";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::WeightsInvalid: return "WeightsInvalid";
    case Errc::Overflow: return "Overflow";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonFiniteIterate: return "NonFiniteIterate";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadHeader: return "BadHeader";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonSquare: return "NonSquare";
    case Errc::DomainError: return "DomainError";
    case Errc::GammaInside: return "GammaInside";
  }
  return "Unknown";
}

}  // namespace specmom
