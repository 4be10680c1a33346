#ifndef SPLITGEOM_ERRORS_HPP
#define SPLITGEOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splitgeom {

/// Inversion of an element with vanishing norm-square (a zero divisor).
struct NullDivisorError : std::domain_error {
  explicit NullDivisorError(const std::string& what) : std::domain_error(what) {}
};

/// Operation requires a unit element (|norm_sq - 1| within tolerance).
struct NotUnitError : std::domain_error {
  explicit NotUnitError(const std::string& what) : std::domain_error(what) {}
};

/// Matrix fails the A * conj(A)^T = id membership test.
struct NotSymplecticError : std::domain_error {
  explicit NotSymplecticError(const std::string& what) : std::domain_error(what) {}
};

/// Direction is null with respect to the indefinite form.
struct NullDirectionError : std::domain_error {
  explicit NullDirectionError(const std::string& what) : std::domain_error(what) {}
};

/// Integrator produced non-finite values.
struct IntegrationBlowupError : std::runtime_error {
  explicit IntegrationBlowupError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not available for this algebra / configuration.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace splitgeom

#endif
