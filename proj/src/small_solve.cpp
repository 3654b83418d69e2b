#include "rsylv/small_solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsylv/errors.hpp"

namespace rsylv {

namespace {

// One code path for both flavors so that, when no guard fires, the guarded
// solve performs exactly the floating-point writes of the plain one.
double small_core(ConstMatrixView a, ConstMatrixView b, MatrixView c,
                  const OverflowConfig& cfg, bool guarded) {
    const std::size_t ma = a.rows, nb = b.rows;
    assert(ma >= 1 && ma <= 2 && a.cols == ma);
    assert(nb >= 1 && nb <= 2 && b.cols == nb);
    assert(c.rows == ma && c.cols == nb);
    const std::size_t nk = ma * nb;

    // K = I (x) A + B^T (x) I over vec(Z) in column-major order
    double k[4][4] = {};
    double rhs[4] = {};
    std::size_t colp[4] = {0, 1, 2, 3};
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < ma; ++i) {
            const std::size_t row = j * ma + i;
            rhs[row] = c(i, j);
            for (std::size_t p = 0; p < ma; ++p) k[row][j * ma + p] += a(i, p);
            for (std::size_t l = 0; l < nb; ++l) k[row][l * ma + i] += b(l, j);
        }

    double beta = 1.0;
    const auto rescale_rhs = [&](double zeta) {
        for (std::size_t r = 0; r < nk; ++r) rhs[r] *= zeta;
        beta = detail::accumulate_scale(beta, zeta);
    };

    // elimination with complete pivoting
    for (std::size_t s = 0; s < nk; ++s) {
        std::size_t pi = s, pj = s;
        double best = -1.0;
        for (std::size_t j = s; j < nk; ++j)
            for (std::size_t i = s; i < nk; ++i) {
                const double v = std::abs(k[i][j]);
                if (v > best) { best = v; pi = i; pj = j; }
            }
        if (!(best >= cfg.small_num)) throw SingularEquationError(k[pi][pj]);
        if (pi != s) {
            for (std::size_t j = 0; j < nk; ++j) std::swap(k[s][j], k[pi][j]);
            std::swap(rhs[s], rhs[pi]);
        }
        if (pj != s) {
            for (std::size_t i = 0; i < nk; ++i) std::swap(k[i][s], k[i][pj]);
            std::swap(colp[s], colp[pj]);
        }
        for (std::size_t i = s + 1; i < nk; ++i) {
            const double mult = k[i][s] / k[s][s]; // |mult| <= 1 by complete pivoting
            k[i][s] = 0.0;
            for (std::size_t j = s + 1; j < nk; ++j) k[i][j] -= mult * k[s][j];
            if (guarded) {
                const long double growth =
                    static_cast<long double>(std::abs(rhs[i])) +
                    static_cast<long double>(std::abs(mult)) * std::abs(rhs[s]);
                const double zeta = detail::update_scale(growth, cfg);
                if (zeta != 1.0) rescale_rhs(zeta);
            }
            rhs[i] -= mult * rhs[s];
        }
    }

    // back substitution; solved components live in rhs[j], j > s
    for (std::size_t s = nk; s-- > 0;) {
        for (std::size_t j = s + 1; j < nk; ++j) {
            if (guarded) {
                const long double growth =
                    static_cast<long double>(std::abs(rhs[s])) +
                    static_cast<long double>(std::abs(k[s][j])) * std::abs(rhs[j]);
                const double zeta = detail::update_scale(growth, cfg);
                if (zeta != 1.0) rescale_rhs(zeta);
            }
            rhs[s] -= k[s][j] * rhs[j];
        }
        if (guarded) {
            const double zeta = protect_division(std::abs(rhs[s]), k[s][s], cfg);
            if (zeta != 1.0) rescale_rhs(zeta);
        }
        rhs[s] /= k[s][s];
    }

    double z[4];
    for (std::size_t s = 0; s < nk; ++s) z[colp[s]] = rhs[s];
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < ma; ++i) c(i, j) = z[j * ma + i];

    if (guarded && nb == 2) {
        // divisions bound entries, but a two-column row sum can reach 2*omega
        const double norm = inf_norm(c);
        if (norm > cfg.omega) {
            const double zeta = detail::update_scale(static_cast<long double>(norm), cfg);
            scale(c, zeta);
            beta = detail::accumulate_scale(beta, zeta);
        }
    }
    return beta;
}

} // namespace

namespace detail {

double small_sylvester_guarded(ConstMatrixView a, ConstMatrixView b, MatrixView c,
                               const OverflowConfig& cfg) {
    return small_core(a, b, c, cfg, true);
}

void small_sylvester_plain(ConstMatrixView a, ConstMatrixView b, MatrixView c,
                           const OverflowConfig& cfg) {
    small_core(a, b, c, cfg, false);
}

} // namespace detail

ScaledSolve solve_small_sylvester(ConstMatrixView a, ConstMatrixView b,
                                  ConstMatrixView c, const OverflowConfig& cfg) {
    if (a.rows != a.cols || a.rows < 1 || a.rows > 2)
        throw std::invalid_argument("solve_small_sylvester: A must be 1x1 or 2x2");
    if (b.rows != b.cols || b.rows < 1 || b.rows > 2)
        throw std::invalid_argument("solve_small_sylvester: B must be 1x1 or 2x2");
    if (c.rows != a.rows || c.cols != b.rows)
        throw std::invalid_argument("solve_small_sylvester: C does not conform");
    if (!(inf_norm(a) <= cfg.omega) || !(inf_norm(b) <= cfg.omega) || !(inf_norm(c) <= cfg.omega))
        throw std::invalid_argument("solve_small_sylvester: input norm exceeds omega");

    ScaledSolve out;
    out.z = copy_of(c);
    out.beta = detail::small_sylvester_guarded(a, b, out.z.view(), cfg);
    return out;
}

} // namespace rsylv
