#include "rsylv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

#include "rsylv/matrix_io.hpp"
#include "rsylv/scalar_solve.hpp"
#include "rsylv/testgen.hpp"
#include "rsylv/tiled_solve.hpp"

namespace rsylv {

QuasiTriangular random_quasi_triangular(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::uniform_real_distribution<double> diag(0.5, 1.5);
    std::bernoulli_distribution pick_pair(0.4);

    DenseMatrix m(n, n);
    std::vector<DiagBlock> blocks;
    std::size_t pos = 0;
    while (pos < n) {
        if (pos + 1 < n && pick_pair(rng)) {
            // real part diag(rng), imaginary pair encoded in the 2x2 block
            const double re = diag(rng), im = diag(rng);
            m(pos, pos) = re;
            m(pos, pos + 1) = im;
            m(pos + 1, pos) = -im;
            m(pos + 1, pos + 1) = re;
            blocks.push_back({pos, 2});
            pos += 2;
        } else {
            m(pos, pos) = diag(rng);
            blocks.push_back({pos, 1});
            pos += 1;
        }
    }
    // strict upper triangle, skipping the in-block entry of each 2x2 block
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (i + 1 != j || m(j, i) == 0.0) m(i, j) = entry(rng);
    return QuasiTriangular(std::move(m), std::move(blocks));
}

DenseMatrix random_dense(std::mt19937_64& rng, std::size_t m, std::size_t n) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    DenseMatrix out(m, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) out(i, j) = entry(rng);
    return out;
}

DenseMatrix dense_kron_solve(const QuasiTriangular& a, const QuasiTriangular& b,
                             ConstMatrixView c) {
    const std::size_t m = a.dim(), n = b.dim(), nk = m * n;
    ConstMatrixView av = a.view(), bv = b.view();
    DenseMatrix k(nk, nk);
    std::vector<double> rhs(nk);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t row = j * m + i;
            rhs[row] = c(i, j);
            for (std::size_t p = 0; p < m; ++p) k(row, j * m + p) += av(i, p);
            for (std::size_t l = 0; l < n; ++l) k(row, l * m + i) += bv(l, j);
        }
    // plain Gaussian elimination with partial pivoting
    for (std::size_t s = 0; s < nk; ++s) {
        std::size_t piv = s;
        for (std::size_t i = s + 1; i < nk; ++i)
            if (std::abs(k(i, s)) > std::abs(k(piv, s))) piv = i;
        if (k(piv, s) == 0.0)
            throw std::runtime_error("dense_kron_solve: singular system");
        if (piv != s) {
            for (std::size_t j = 0; j < nk; ++j) std::swap(k(s, j), k(piv, j));
            std::swap(rhs[s], rhs[piv]);
        }
        for (std::size_t i = s + 1; i < nk; ++i) {
            const double f = k(i, s) / k(s, s);
            if (f == 0.0) continue;
            for (std::size_t j = s + 1; j < nk; ++j) k(i, j) -= f * k(s, j);
            rhs[i] -= f * rhs[s];
        }
    }
    for (std::size_t s = nk; s-- > 0;) {
        for (std::size_t j = s + 1; j < nk; ++j) rhs[s] -= k(s, j) * rhs[j];
        rhs[s] /= k(s, s);
    }
    DenseMatrix y(m, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) y(i, j) = rhs[j * m + i];
    return y;
}

namespace {

double rel_inf_diff(ConstMatrixView got, ConstMatrixView want) {
    DenseMatrix d = copy_of(got);
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, j) -= want(i, j);
    const double ref = inf_norm(want);
    return ref == 0.0 ? inf_norm(d.view()) : inf_norm(d.view()) / ref;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
    std::ostringstream out;
    bool ok = true;
    const auto check = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            out << "  FAILED: " << what << '\n';
        }
    };

    OverflowConfig wide;
    wide.omega = std::numeric_limits<double>::max();

    // oracle equivalence: all three solvers against the dense Kronecker solve
    out << "oracle equivalence (tolerance " << format_double(opt.oracle_tol) << ")\n";
    std::mt19937_64 rng(opt.seed);
    for (std::size_t n : opt.sizes) {
        for (std::size_t rep = 0; rep < opt.systems_per_size; ++rep) {
            const std::size_t nb = std::max<std::size_t>(3, n / 2);
            QuasiTriangular a = random_quasi_triangular(rng, n);
            QuasiTriangular b = random_quasi_triangular(rng, nb);
            DenseMatrix c = random_dense(rng, n, nb);
            DenseMatrix ref = dense_kron_solve(a, b, c.view());
            if (opt.inject_bug) ref(0, 0) = -ref(0, 0);

            DenseMatrix y0 = solve_nonrobust(a, b, c.view());
            SolveResult y1 = solve_robust_scalar(a, b, c.view(), wide);
            SolveResult y2 = solve_tiled_robust(a, b, c.view(), opt.tile_size, wide);
            const double d0 = rel_inf_diff(y0.view(), ref.view());
            const double d1 = rel_inf_diff(y1.y.view(), ref.view());
            const double d2 = rel_inf_diff(y2.y.view(), ref.view());
            out << "  m=" << n << " n=" << nb << " diff nonrobust=" << format_double(d0)
                << " robust-scalar=" << format_double(d1)
                << " robust-tiled=" << format_double(d2) << '\n';
            check(d0 <= opt.oracle_tol, "nonrobust differs from the dense reference");
            check(d1 <= opt.oracle_tol, "robust-scalar differs from the dense reference");
            check(d2 <= opt.oracle_tol, "robust-tiled differs from the dense reference");
            check(y1.alpha == 1.0 && y2.alpha == 1.0, "robust solver scaled a benign system");
        }
    }

    // generator residuals
    out << "generator residuals\n";
    for (std::size_t n : opt.sizes) {
        GeneratorSpec ga{n, static_cast<double>(n), mixed_pattern(n)};
        GeneratorSpec gb{n, static_cast<double>(n), mixed_pattern(n)};
        QuasiTriangular a = generate_quasi_triangular(ga);
        QuasiTriangular b = generate_quasi_triangular(gb);
        DenseMatrix c = generate_rhs(n, n);
        SolveResult r = solve_tiled_robust(a, b, c.view(), opt.tile_size, wide);
        const double res = relative_residual(a.view(), b.view(), c.view(), r.y.view(), r.alpha);
        out << "  n=" << n << " residual=" << format_double(res) << '\n';
        check(res <= opt.oracle_tol, "generator residual out of tolerance");
    }

    // bounded tiles under an artificially small threshold
    double min_alpha = 1.0;
    out << "bounded tiles (mu=" << format_double(opt.mu) << " nu=" << format_double(opt.nu)
        << ")\n";
    for (double omega : opt.omegas) {
        OverflowConfig cfg;
        cfg.omega = omega;
        const std::size_t n = opt.growth_size;
        QuasiTriangular a = generate_quasi_triangular({n, opt.mu, mixed_pattern(n)});
        QuasiTriangular b = generate_quasi_triangular({n, opt.nu, mixed_pattern(n)});
        DenseMatrix c = generate_rhs(n, n);
        bool bounded = true;
        double local_min = 1.0;
        const TileProbe probe = [&](std::size_t, std::size_t, double al, double norm) {
            if (!(norm <= omega)) bounded = false;
            local_min = std::min(local_min, al);
        };
        SolveResult r = solve_tiled_robust(a, b, c.view(), std::max<std::size_t>(opt.tile_size, 2),
                                           cfg, ExecutionMode::sequential(), probe);
        const double res = relative_residual(a.view(), b.view(), c.view(), r.y.view(), r.alpha);
        min_alpha = std::min(min_alpha, std::min(local_min, r.alpha));
        out << "  omega=" << format_double(omega) << " n=" << n
            << " alpha=" << format_double(r.alpha)
            << " min-local-alpha=" << format_double(local_min)
            << " residual=" << format_double(res) << '\n';
        check(bounded, "a tile norm exceeded omega at rest");
        check(r.alpha < 1.0, "growth system did not trigger scaling");
        check(res <= 1e-12, "scaled residual out of tolerance");
    }

    VerifyReport rep;
    rep.min_local_alpha = min_alpha;
    rep.ok = ok;
    out << (ok ? "verification passed" : "verification FAILED") << '\n';
    rep.text = out.str();
    return rep;
}

} // namespace rsylv
