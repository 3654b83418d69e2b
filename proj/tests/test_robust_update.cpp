#include <doctest.h>

#include <limits>
#include <random>

#include "rsylv/errors.hpp"
#include "rsylv/robust_update.hpp"
#include "support/oracles.hpp"

using namespace rsylv;

namespace {

Augmented make_aug(double s, DenseMatrix& m) { return {s, m.view(), inf_norm(m.view())}; }
ConstAugmented make_caug(double s, const DenseMatrix& m) {
    return {s, m.view(), inf_norm(m.view())};
}

// wide-range recomputation of gamma^-1 C - (alpha^-1 A)(beta^-1 B)
DenseMatrix unscaled_reference(double g, ConstMatrixView c, double al, ConstMatrixView a,
                               double be, ConstMatrixView b) {
    DenseMatrix r = copy_scaled(c, 1.0 / g);
    DenseMatrix ua = copy_scaled(a, 1.0 / al);
    DenseMatrix ub = copy_scaled(b, 1.0 / be);
    oracle::gemm_sub(r.view(), ua.view(), ub.view());
    return r;
}

} // namespace

TEST_CASE("identity update gives the zero tile with unit scale") {
    OverflowConfig cfg;
    cfg.omega = 1e4;
    DenseMatrix c = DenseMatrix::identity(2);
    DenseMatrix a = DenseMatrix::identity(2);
    DenseMatrix b = DenseMatrix::identity(2);
    Augmented dst = make_aug(1.0, c);
    robust_update(dst, make_caug(1.0, a), make_caug(1.0, b), cfg);
    CHECK(dst.scale == 1.0);
    CHECK(max_abs(c.view()) == 0.0);
    CHECK(dst.norm == 0.0);
}

TEST_CASE("scale factors propagate through eta") {
    OverflowConfig cfg;
    cfg.omega = 1e4;
    DenseMatrix c(2, 2); // zero tile
    DenseMatrix a = DenseMatrix::identity(2);
    DenseMatrix b = DenseMatrix::identity(2);
    Augmented dst = make_aug(1.0, c);
    robust_update(dst, make_caug(0.5, a), make_caug(1.0, b), cfg);
    CHECK(dst.scale == 0.5);
    // delta^-1 D = -(0.5^-1 I) = -2 I, so D = -I
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(c(i, j) == (i == j ? -1.0 : 0.0));
}

TEST_CASE("growth at the threshold is scaled below omega and stays equivalent") {
    OverflowConfig cfg;
    cfg.omega = 100.0;
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix c(3, 3), a(3, 3), b(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            c(i, j) = u(rng);
            a(i, j) = u(rng);
            b(i, j) = u(rng);
        }
    // push every norm to omega exactly
    scale(c.view(), cfg.omega / inf_norm(c.view()));
    scale(a.view(), cfg.omega / inf_norm(a.view()));
    scale(b.view(), cfg.omega / inf_norm(b.view()));
    while (inf_norm(c.view()) > cfg.omega) scale(c.view(), 1.0 - 1e-15);
    while (inf_norm(a.view()) > cfg.omega) scale(a.view(), 1.0 - 1e-15);
    while (inf_norm(b.view()) > cfg.omega) scale(b.view(), 1.0 - 1e-15);

    DenseMatrix ref = unscaled_reference(1.0, c.view(), 1.0, a.view(), 1.0, b.view());
    Augmented dst = make_aug(1.0, c);
    robust_update(dst, make_caug(1.0, a), make_caug(1.0, b), cfg);
    CHECK(dst.scale < 1.0);
    CHECK(inf_norm(c.view()) <= cfg.omega);
    DenseMatrix got = copy_scaled(c.view(), 1.0 / dst.scale);
    CHECK(oracle::rel_inf_diff(got.view(), ref.view()) <= 1e-13);
}

TEST_CASE("no-scaling path is bitwise identical to gemm_update") {
    OverflowConfig cfg; // default omega, far from any trigger
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t m = 1 + rng() % 8, k = 1 + rng() % 8, n = 1 + rng() % 8;
        DenseMatrix c(m, n), a(m, k), b(k, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) c(i, j) = u(rng);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < m; ++i) a(i, j) = u(rng);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < k; ++i) b(i, j) = u(rng);
        DenseMatrix plain = copy_of(c.view());
        gemm_update(plain.view(), a.view(), b.view());
        Augmented dst = make_aug(1.0, c);
        robust_update(dst, make_caug(1.0, a), make_caug(1.0, b), cfg);
        CHECK(dst.scale == 1.0);
        CHECK(oracle::bitwise_equal(c.view(), plain.view()));
    }
}

TEST_CASE("equivalent inputs map to equivalent outputs") {
    OverflowConfig cfg;
    cfg.omega = 50.0;
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> sc(0.1, 1.0);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t m = 1 + rng() % 4, k = 1 + rng() % 4, n = 1 + rng() % 4;
        const double g = sc(rng), al = sc(rng), be = sc(rng);
        DenseMatrix c(m, n), a(m, k), b(k, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) c(i, j) = u(rng);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < m; ++i) a(i, j) = u(rng);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < k; ++i) b(i, j) = u(rng);
        DenseMatrix ref = unscaled_reference(g, c.view(), al, a.view(), be, b.view());

        Augmented dst = make_aug(g, c);
        robust_update(dst, make_caug(al, a), make_caug(be, b), cfg);
        CHECK(inf_norm(c.view()) <= cfg.omega);
        CHECK(dst.norm == inf_norm(c.view()));
        DenseMatrix got = copy_scaled(c.view(), 1.0 / dst.scale);
        CHECK(oracle::rel_inf_diff(got.view(), ref.view()) <= 1e-12);
    }
}

TEST_CASE("invalid scales and norms are rejected") {
    OverflowConfig cfg;
    cfg.omega = 1.0;
    DenseMatrix c(1, 1), a(1, 1), b(1, 1);
    Augmented dst = make_aug(1.0, c);
    CHECK_THROWS_AS(robust_update(dst, make_caug(2.0, a), make_caug(1.0, b), cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(robust_update(dst, make_caug(0.0, a), make_caug(1.0, b), cfg),
                    std::invalid_argument);
    DenseMatrix big(1, 1, 5.0);
    Augmented dst2 = make_aug(1.0, big);
    CHECK_THROWS_AS(robust_update(dst2, make_caug(1.0, a), make_caug(1.0, b), cfg),
                    std::invalid_argument);
}
