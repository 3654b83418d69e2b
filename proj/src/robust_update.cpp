#include "rsylv/robust_update.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsylv {

namespace {

void require_scale(const char* who, double s) {
    if (!(s >= std::numeric_limits<double>::min()) || !(s <= 1.0))
        throw std::invalid_argument(std::string(who) + ": scale factor outside (0, 1]");
}

void require_norm(const char* who, double v, const OverflowConfig& cfg) {
    if (!(v >= 0.0) || !(v <= cfg.omega))
        throw std::invalid_argument(std::string(who) + ": tile norm outside [0, omega]");
}

} // namespace

void robust_update(Augmented& c, const ConstAugmented& a, const ConstAugmented& b,
                   const OverflowConfig& cfg) {
    require_scale("robust_update", c.scale);
    require_scale("robust_update", a.scale);
    require_scale("robust_update", b.scale);
    require_norm("robust_update", c.norm, cfg);
    require_norm("robust_update", a.norm, cfg);
    require_norm("robust_update", b.norm, cfg);
    assert(a.tile.rows == c.tile.rows && b.tile.cols == c.tile.cols &&
           a.tile.cols == b.tile.rows);

    const double eta = std::min({c.scale, a.scale, b.scale});
    // growth bound of eta * (gamma^-1 C - (alpha^-1 A)(beta^-1 B)), evaluated in
    // extended range: the scale ratios can exceed 1 jointly with huge norms
    const long double growth =
        static_cast<long double>(eta / c.scale) * c.norm +
        static_cast<long double>(eta) / a.scale / b.scale *
            (static_cast<long double>(a.norm) * static_cast<long double>(b.norm));
    const double zeta = detail::update_scale(growth, cfg);
    const double delta = detail::accumulate_scale(eta, zeta);

    const double cf = delta / c.scale; // <= 1
    if (cf != 1.0) scale(c.tile, cf);

    // product coefficient delta/(alpha*beta); bounded by 1/max(alpha, beta)
    const double pf = (delta / a.scale) / b.scale;
    if (pf == 1.0) {
        gemm_update(c.tile, a.tile, b.tile);
    } else if (a.norm <= b.norm) {
        // scaling the smaller-normed operand keeps the scaled copy finite
        DenseMatrix t = copy_scaled(a.tile, pf);
        gemm_update(c.tile, t.view(), b.tile);
    } else {
        DenseMatrix t = copy_scaled(b.tile, pf);
        gemm_update(c.tile, a.tile, t.view());
    }

    c.scale = delta;
    c.norm = inf_norm(c.tile);
}

} // namespace rsylv
