#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitci {

enum class ErrorKind {
  FieldMismatch,
  DivisionByZero,
  Parse,
  RingMismatch,
  SingularMatrix,
  InvalidArgument,
  NotArtinian,
  SocleNotOneDimensional,
  SelectedFactorsDependent,
  ZeroDiagonalCoefficient,
  ResourceLimit,
  Schema,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "field_mismatch";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::RingMismatch: return "ring_mismatch";
    case ErrorKind::SingularMatrix: return "singular_matrix";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NotArtinian: return "not_artinian";
    case ErrorKind::SocleNotOneDimensional: return "socle_not_one_dimensional";
    case ErrorKind::SelectedFactorsDependent: return "selected_factors_dependent";
    case ErrorKind::ZeroDiagonalCoefficient: return "zero_diagonal_coefficient";
    case ErrorKind::ResourceLimit: return "resource_limit";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splitci
