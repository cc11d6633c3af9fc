#ifndef FNF_TYPES_HPP
#define FNF_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fnf {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

constexpr double kPi = 3.141592653589793238462643383279502884;

/// Mismatched dimensions, truncation orders, expansion centers, or
/// otherwise ill-formed inputs.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// Integrability or special-function domain violations (gamma poles,
/// non-positive weight exponents).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A divisor k + p + q fell below tolerance; message names the witness.
class ResonanceError : public std::runtime_error {
 public:
  explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check (e.g. the leftover row of the triangular
/// homological solve) exceeded its tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was refused because a required assumption failed.
class AssumptionError : public std::runtime_error {
 public:
  explicit AssumptionError(const std::string& what) : std::runtime_error(what) {}
};

/// Runtime numeric failures: polydisk escape, step underflow, invalid paths.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem-file parse/validation failure; message carries the field path.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fnf

#endif  // FNF_TYPES_HPP
