#include "rsylv/testgen.hpp"

#include <stdexcept>

#include "rsylv/errors.hpp"

namespace rsylv {

std::vector<std::size_t> mixed_pattern(std::size_t n) {
    std::vector<std::size_t> p;
    std::size_t pos = 0, next = 1;
    while (pos < n) {
        std::size_t s = next;
        if (pos + s > n) s = 1;
        p.push_back(s);
        pos += s;
        next = (next == 1) ? 2 : 1;
    }
    return p;
}

std::vector<std::size_t> ones_pattern(std::size_t n) {
    return std::vector<std::size_t>(n, 1);
}

QuasiTriangular generate_quasi_triangular(const GeneratorSpec& spec) {
    if (!(spec.mu > 0.0))
        throw std::invalid_argument("generate_quasi_triangular: mu must be positive");
    std::size_t total = 0;
    for (std::size_t s : spec.pattern) {
        if (s != 1 && s != 2)
            throw std::invalid_argument("generate_quasi_triangular: block sizes must be 1 or 2");
        total += s;
    }
    if (total != spec.n)
        throw std::invalid_argument("generate_quasi_triangular: block sizes must sum to n");

    DenseMatrix m(spec.n, spec.n);
    for (std::size_t j = 0; j < spec.n; ++j)
        for (std::size_t i = 0; i < j; ++i) m(i, j) = 1.0;

    std::vector<DiagBlock> blocks;
    std::size_t pos = 0;
    for (std::size_t s : spec.pattern) {
        blocks.push_back({pos, s});
        if (s == 1) {
            m(pos, pos) = spec.mu;
        } else {
            m(pos, pos) = spec.mu;
            m(pos, pos + 1) = spec.mu;
            m(pos + 1, pos) = -spec.mu;
            m(pos + 1, pos + 1) = spec.mu;
        }
        pos += s;
    }
    return QuasiTriangular(std::move(m), std::move(blocks));
}

DenseMatrix generate_rhs(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("generate_rhs: dimensions must be >= 1");
    return DenseMatrix(m, n, 1.0);
}

double relative_residual(ConstMatrixView a, ConstMatrixView b, ConstMatrixView c,
                         ConstMatrixView y, double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("relative_residual: alpha must lie in (0, 1]");
    if (c.rows != a.rows || c.cols != b.cols || y.rows != c.rows || y.cols != c.cols ||
        a.rows != a.cols || b.rows != b.cols)
        throw std::invalid_argument("relative_residual: dimensions do not conform");

    DenseMatrix r = copy_scaled(c, alpha);
    const double ac_norm = frob_norm(r.view());
    gemm_update(r.view(), a, y);
    gemm_update(r.view(), y, b);
    const double denom = (frob_norm(a) + frob_norm(b)) * frob_norm(y) + ac_norm;
    if (denom == 0.0) throw UndefinedResidualError();
    return frob_norm(r.view()) / denom;
}

} // namespace rsylv
