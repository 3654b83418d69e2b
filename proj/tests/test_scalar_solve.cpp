#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rsylv/errors.hpp"
#include "rsylv/scalar_solve.hpp"
#include "rsylv/testgen.hpp"
#include "rsylv/verify.hpp"
#include "support/oracles.hpp"

using namespace rsylv;

namespace {

OverflowConfig wide_config() {
    OverflowConfig cfg;
    cfg.omega = std::numeric_limits<double>::max();
    return cfg;
}

} // namespace

TEST_CASE("1x1 system") {
    DenseMatrix a(1, 1), b(1, 1), c(1, 1);
    a(0, 0) = 2.0;
    b(0, 0) = 3.0;
    c(0, 0) = 10.0;
    QuasiTriangular qa{std::move(a)}, qb{std::move(b)};
    DenseMatrix y = solve_nonrobust(qa, qb, c.view());
    CHECK(y(0, 0) == 2.0);
}

TEST_CASE("diagonal identity pair") {
    QuasiTriangular qa{DenseMatrix::identity(2)};
    QuasiTriangular qb{DenseMatrix::identity(2)};
    DenseMatrix c = copy_scaled(DenseMatrix::identity(2).view(), 2.0);
    DenseMatrix y = solve_nonrobust(qa, qb, c.view());
    CHECK(oracle::rel_inf_diff(y.view(), DenseMatrix::identity(2).view()) <= 1e-15);
}

TEST_CASE("nonrobust solve matches the Kronecker oracle on a mixed-block system") {
    std::mt19937_64 rng(59);
    QuasiTriangular a = random_quasi_triangular(rng, 10);
    QuasiTriangular b = random_quasi_triangular(rng, 8);
    DenseMatrix c = random_dense(rng, 10, 8);
    DenseMatrix y = solve_nonrobust(a, b, c.view());
    DenseMatrix ref = oracle::kron_solve(a, b, c.view());
    CHECK(oracle::rel_inf_diff(y.view(), ref.view()) <= 1e-12);
}

TEST_CASE("robust scalar equals nonrobust bitwise when nothing triggers") {
    for (std::size_t n : {9u, 16u, 25u}) {
        GeneratorSpec g{n, static_cast<double>(n), mixed_pattern(n)};
        QuasiTriangular a = generate_quasi_triangular(g);
        QuasiTriangular b = generate_quasi_triangular(g);
        DenseMatrix c = generate_rhs(n, n);
        DenseMatrix y0 = solve_nonrobust(a, b, c.view());
        SolveResult r = solve_robust_scalar(a, b, c.view());
        CHECK(r.alpha == 1.0);
        CHECK(oracle::bitwise_equal(r.y.view(), y0.view()));
    }
}

TEST_CASE("1x1 tiny pair scales globally") {
    DenseMatrix a(1, 1), b(1, 1), c(1, 1);
    a(0, 0) = 1e-8;
    b(0, 0) = 1e-8;
    c(0, 0) = 1.0;
    QuasiTriangular qa{std::move(a)}, qb{std::move(b)};
    OverflowConfig cfg;
    cfg.omega = 1e4;
    SolveResult r = solve_robust_scalar(qa, qb, c.view(), cfg);
    CHECK(r.alpha < 1.0);
    CHECK(std::abs(r.y(0, 0)) <= 1e4);
    CHECK(2e-8 * r.y(0, 0) == doctest::Approx(r.alpha).epsilon(1e-15));
}

TEST_CASE("20x20 growth system stays bounded with a small residual") {
    const std::size_t n = 20;
    QuasiTriangular a = generate_quasi_triangular({n, 1e-3, mixed_pattern(n)});
    QuasiTriangular b = generate_quasi_triangular({n, 1e-2, mixed_pattern(n)});
    DenseMatrix c = generate_rhs(n, n);
    OverflowConfig cfg;
    cfg.omega = 1e4;
    SolveResult r = solve_robust_scalar(a, b, c.view(), cfg);
    CHECK(r.alpha > 0.0);
    CHECK(r.alpha < 1.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(r.y(i, j)) <= 1e4);
    CHECK(relative_residual(a.view(), b.view(), c.view(), r.y.view(), r.alpha) <= 1e-13);
}

TEST_CASE("robust scalar agrees with the dense oracle on random systems") {
    std::mt19937_64 rng(61);
    OverflowConfig wide = wide_config();
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t m = 3 + rng() % 38, n = 3 + rng() % 38;
        QuasiTriangular a = random_quasi_triangular(rng, m);
        QuasiTriangular b = random_quasi_triangular(rng, n);
        DenseMatrix c = random_dense(rng, m, n);
        SolveResult r = solve_robust_scalar(a, b, c.view(), wide);
        CHECK(r.alpha == 1.0);
        DenseMatrix ref = oracle::kron_solve(a, b, c.view());
        CHECK(oracle::rel_inf_diff(r.y.view(), ref.view()) <= 1e-11);
    }
}

TEST_CASE("every block stays within omega after every step") {
    // record block norms after each solve/update step via the trace hook
    const std::size_t n = 20;
    for (double mu : {1e-3, 1e-7}) {
        QuasiTriangular a = generate_quasi_triangular({n, mu, mixed_pattern(n)});
        QuasiTriangular b = generate_quasi_triangular({n, 1e-2, mixed_pattern(n)});
        DenseMatrix y = generate_rhs(n, n);
        OverflowConfig cfg;
        cfg.omega = 1e4;
        bool bounded = true;
        const detail::ScalarTrace trace = [&](ConstMatrixView full) {
            for (const DiagBlock& rb : a.diag_blocks())
                for (const DiagBlock& cb : b.diag_blocks())
                    if (!(inf_norm(full.block(rb.start, rb.size, cb.start, cb.size)) <= cfg.omega))
                        bounded = false;
        };
        detail::robust_scalar_inplace(a.view(), a.diag_blocks(), b.view(), b.diag_blocks(),
                                      y.view(), cfg, trace);
        CHECK(bounded);
    }
}

TEST_CASE("scale consistency of the returned pair") {
    const double eps = std::ldexp(1.0, -53);
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 5; ++rep) {
        const std::size_t m = 10 + rng() % 20, n = 10 + rng() % 20;
        QuasiTriangular a = random_quasi_triangular(rng, m);
        QuasiTriangular b = random_quasi_triangular(rng, n);
        DenseMatrix c = random_dense(rng, m, n);
        SolveResult r = solve_robust_scalar(a, b, c.view(), wide_config());
        const double res = relative_residual(a.view(), b.view(), c.view(), r.y.view(), r.alpha);
        CHECK(res <= 100 * eps * static_cast<double>(std::max(m, n)));
    }
}

TEST_CASE("singular pairs are reported") {
    DenseMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1.0; a(1, 1) = 2.0;
    b(0, 0) = -1.0; b(1, 1) = 3.0;
    QuasiTriangular qa{std::move(a)}, qb{std::move(b)};
    DenseMatrix c(2, 2, 1.0);
    CHECK_THROWS_AS(solve_nonrobust(qa, qb, c.view()), SingularEquationError);
    CHECK_THROWS_AS(solve_robust_scalar(qa, qb, c.view()), SingularEquationError);
}

TEST_CASE("alpha underflow raises instead of returning a denormal scale") {
    // growth compounds ~90x per block step; 200 steps demand an alpha far
    // below the smallest normal double
    const std::size_t n = 200;
    QuasiTriangular a = generate_quasi_triangular({n, 1e-3, ones_pattern(n)});
    QuasiTriangular b = generate_quasi_triangular({n, 1e-2, ones_pattern(n)});
    DenseMatrix c = generate_rhs(n, n);
    OverflowConfig cfg;
    cfg.omega = 1e4;
    CHECK_THROWS_AS(solve_robust_scalar(a, b, c.view(), cfg), ScaleUnderflowError);
}
