#include "varden/error.hpp"

namespace varden {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidPointId: return "InvalidPointId";
    case Errc::NonPositiveEps: return "NonPositiveEps";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ClusterNotSubset: return "ClusterNotSubset";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::UnknownScenario: return "UnknownScenario";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::MissingGroundTruth: return "MissingGroundTruth";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> index,
             std::optional<std::size_t> column)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      index_(index),
      column_(column) {}

}  // namespace varden
