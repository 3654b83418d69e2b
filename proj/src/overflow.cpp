#include "rsylv/overflow.hpp"

#include <cassert>

#include <cmath>
#include <stdexcept>
#include <string>

#include "rsylv/errors.hpp"

namespace rsylv {

namespace {

// Headroom of one part in 2^30 on scaled targets, so the rounding of the
// guarded update itself cannot push a result past omega.
constexpr double kShave = 1.0 - 0x1p-30;

void require_bound(const char* who, double value, const OverflowConfig& cfg) {
    if (!(value >= 0.0) || !(value <= cfg.omega))
        throw std::invalid_argument(std::string(who) + ": bound " + std::to_string(value) +
                                    " outside [0, omega]");
}

} // namespace

namespace detail {

double update_scale(long double growth, const OverflowConfig& cfg) {
    assert(cfg.omega > 1.0);
    const long double omega = cfg.omega;
    if (growth <= omega) return 1.0;
    const long double target = omega * static_cast<long double>(kShave);
    double zeta = static_cast<double>(target / growth);
    while (zeta > 0.0 && static_cast<long double>(zeta) * growth > target)
        zeta = std::nextafter(zeta, 0.0);
    if (zeta <= 0.0) throw ScaleUnderflowError();
    cfg.count_scaling();
    return zeta;
}

double accumulate_scale(double acc, double factor) {
    const double next = acc * factor;
    if (next < std::numeric_limits<double>::min()) throw ScaleUnderflowError();
    return next;
}

} // namespace detail

double protect_update(double cnorm, double anorm, double bnorm, const OverflowConfig& cfg) {
    require_bound("protect_update", cnorm, cfg);
    require_bound("protect_update", anorm, cfg);
    require_bound("protect_update", bnorm, cfg);
    const long double growth = static_cast<long double>(cnorm) +
                               static_cast<long double>(anorm) * static_cast<long double>(bnorm);
    return detail::update_scale(growth, cfg);
}

double protect_division(double numer_bound, double divisor, const OverflowConfig& cfg) {
    require_bound("protect_division", numer_bound, cfg);
    if (divisor == 0.0) throw SingularEquationError(0.0);
    const double t = std::abs(divisor);
    if (t >= 1.0) return 1.0;                       // quotient <= numer_bound <= omega
    if (numer_bound <= cfg.omega * t) return 1.0;   // omega*t <= omega, no overflow in the test
    double zeta = (cfg.omega * t) / numer_bound * kShave;
    // Enforce the contract under the caller's evaluation order and in extended
    // precision; usually zero iterations.
    while (zeta > 0.0 &&
           ((zeta * numer_bound) / t > cfg.omega ||
            static_cast<long double>(zeta) * numer_bound / t > static_cast<long double>(cfg.omega)))
        zeta = std::nextafter(zeta, 0.0);
    if (zeta <= 0.0) throw ScaleUnderflowError();
    cfg.count_scaling();
    return zeta;
}

} // namespace rsylv
