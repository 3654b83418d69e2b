#pragma once

// Overflow-protection guards. Each guard returns a scaling factor zeta in
// (0,1] such that the guarded operation, applied to zeta-scaled operands,
// cannot exceed the configured threshold omega.

#include <atomic>
#include <cstdint>
#include <limits>

namespace rsylv {

struct OverflowConfig {
    /// Largest magnitude any stored intermediate may reach.
    double omega = default_omega();

    /// Pivots/divisors below this magnitude are treated as singular.
    double small_num = default_small_num();

    /// Optional diagnostic sink, bumped once per guard activation (zeta < 1).
    std::atomic<std::uint64_t>* scaling_events = nullptr;

    static constexpr double default_omega() {
        return std::numeric_limits<double>::max() / 2;
    }

    static constexpr double default_small_num() {
        return std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    }

    void count_scaling() const {
        if (scaling_events) scaling_events->fetch_add(1, std::memory_order_relaxed);
    }
};

/// Returns zeta in (0,1] with zeta*(cnorm + anorm*bnorm) <= omega, and exactly
/// 1 whenever cnorm + anorm*bnorm <= omega already. The product is evaluated
/// in extended range so it cannot overflow. Inputs must lie in [0, omega].
double protect_update(double cnorm, double anorm, double bnorm, const OverflowConfig& cfg);

/// Returns zeta in (0,1] such that the quotient (zeta*numer)/divisor stays
/// within omega for every |numer| <= numer_bound, evaluated the way callers
/// evaluate it (scale the numerator, then divide); exactly 1 whenever
/// numer_bound/|divisor| <= omega already. Requires 0 <= numer_bound <= omega.
/// A zero divisor raises SingularEquationError.
double protect_division(double numer_bound, double divisor, const OverflowConfig& cfg);

namespace detail {

/// Core of protect_update without the [0, omega] domain check: maps a
/// worst-case growth bound, evaluated in long double so huge operand products
/// stay finite, to a scaling factor. Used where operand norms legitimately
/// exceed omega (Kronecker-system entries reach 2*omega).
double update_scale(long double growth, const OverflowConfig& cfg);

/// next.scale = acc * factor, raising ScaleUnderflowError if the product drops
/// below the smallest normal double.
double accumulate_scale(double acc, double factor);

} // namespace detail
} // namespace rsylv
