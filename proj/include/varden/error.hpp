#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace varden {

enum class Errc {
  EmptyDataset,
  NonFiniteCoordinate,
  DimensionMismatch,
  InvalidPointId,
  NonPositiveEps,
  InvalidParams,
  ClusterNotSubset,
  InvalidSpec,
  UnknownScenario,
  LengthMismatch,
  DegenerateInput,
  MissingGroundTruth,
  FileNotFound,
  ParseError,
  UnsupportedDimension,
  IoError,
};

std::string_view to_string(Errc code);

// Single exception type for the library. `index` carries the offending point
// id (or line number for parse errors); `column` is set only for ParseError.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt,
        std::optional<std::size_t> column = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
  std::optional<std::size_t> column_;
};

}  // namespace varden
