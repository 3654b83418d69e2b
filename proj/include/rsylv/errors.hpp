#pragma once

#include <stdexcept>
#include <string>

namespace rsylv {

/// An eigenvalue pair lambda_i(A) + lambda_j(B) is numerically zero, so the
/// equation has no unique solution. Carries the offending pivot.
class SingularEquationError : public std::runtime_error {
public:
    explicit SingularEquationError(double pivot)
        : std::runtime_error("singular Sylvester equation: pivot magnitude " +
                             std::to_string(pivot) + " below the tiny-divisor threshold"),
          pivot_(pivot) {}

    double pivot() const noexcept { return pivot_; }

private:
    double pivot_;
};

/// An accumulated scaling factor would drop below the smallest normal double,
/// making its reciprocal unusable.
class ScaleUnderflowError : public std::runtime_error {
public:
    ScaleUnderflowError()
        : std::runtime_error("scaling factor underflow: accumulated scale fell "
                             "below the smallest normal double") {}
};

/// The relative-residual denominator is identically zero (all inputs zero).
class UndefinedResidualError : public std::runtime_error {
public:
    UndefinedResidualError()
        : std::runtime_error("relative residual undefined: zero denominator") {}
};

} // namespace rsylv
