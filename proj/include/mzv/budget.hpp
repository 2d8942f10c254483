#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mzv {

/// Raised when a computation would enumerate or allocate past the configured
/// resource caps. The CLI maps this to exit code 2.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on division by a zero polynomial or rational function.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Resource caps shared by the enumeration-heavy operations.
///
/// Defaults can be overridden with the environment variables
/// `MZV_ENUM_CAP` (max number of monic polynomials enumerated per degree),
/// `MZV_PREC_CAP` (max u-adic precision for Laurent tails) and
/// `MZV_DEGREE_CAP` (max t-degree of any single polynomial).
struct Budget {
  std::uint64_t max_enumeration = std::uint64_t{1} << 24;
  std::int64_t max_precision = 4096;
  std::int64_t max_degree = std::int64_t{1} << 26;

  static Budget from_env();

  /// Throws BudgetExceeded when q^d exceeds max_enumeration.
  void check_enumeration(std::uint64_t q, std::int64_t d) const;
  void check_precision(std::int64_t n) const;
  void check_degree(std::int64_t deg, const char* what) const;
};

}  // namespace mzv
