#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace herbst {

enum class ErrorKind {
  SingularMatrix,
  NotSquare,
  EmptyMatrix,
  DimensionMismatch,
  InvalidArgument,
  SingularChoice,
  NotNegativeCone,
  RankDeficientGaugeGroup,
  LevelNotInImage,
  NotInterior,
  RejectionBudgetExceeded,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SingularMatrix: return "singular_matrix";
  case ErrorKind::NotSquare: return "not_square";
  case ErrorKind::EmptyMatrix: return "empty_matrix";
  case ErrorKind::DimensionMismatch: return "dimension_mismatch";
  case ErrorKind::InvalidArgument: return "invalid_argument";
  case ErrorKind::SingularChoice: return "singular_choice";
  case ErrorKind::NotNegativeCone: return "not_negative_cone";
  case ErrorKind::RankDeficientGaugeGroup: return "rank_deficient_gauge_group";
  case ErrorKind::LevelNotInImage: return "level_not_in_image";
  case ErrorKind::NotInterior: return "not_interior";
  case ErrorKind::RejectionBudgetExceeded: return "rejection_budget_exceeded";
  case ErrorKind::ParseError: return "parse_error";
  }
  return "unknown";
}

/// Every failure raised by the library. `kind()` is the machine-readable
/// code; `location()` is set for errors that point at a matrix entry
/// (NotNegativeCone) or a text position (ParseError: line, column, 1-based).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what,
        std::optional<std::pair<std::size_t, std::size_t>> location = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind), location_(location) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::pair<std::size_t, std::size_t>> &location() const noexcept {
    return location_;
  }

private:
  ErrorKind kind_;
  std::optional<std::pair<std::size_t, std::size_t>> location_;
};

} // namespace herbst
