#include "rsylv/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace rsylv {

double inf_norm(ConstMatrixView m) {
    if (m.empty()) return 0.0;
    if (m.cols == 1) {
        double best = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i)
            best = std::max(best, std::abs(m.data[i]));
        return best;
    }
    if (m.rows <= 4 || m.cols <= 2) {
        double best = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m.cols; ++j) s += std::abs(m(i, j));
            best = std::max(best, s);
        }
        return best;
    }
    std::vector<double> row_sum(m.rows, 0.0);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double* col = m.data + j * m.ld;
        for (std::size_t i = 0; i < m.rows; ++i) row_sum[i] += std::abs(col[i]);
    }
    return *std::max_element(row_sum.begin(), row_sum.end());
}

double frob_norm(ConstMatrixView m) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double* col = m.data + j * m.ld;
        for (std::size_t i = 0; i < m.rows; ++i) s += col[i] * col[i];
    }
    return std::sqrt(s);
}

double max_abs(ConstMatrixView m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double* col = m.data + j * m.ld;
        for (std::size_t i = 0; i < m.rows; ++i)
            best = std::max(best, std::abs(col[i]));
    }
    return best;
}

bool all_finite(ConstMatrixView m) {
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double* col = m.data + j * m.ld;
        for (std::size_t i = 0; i < m.rows; ++i)
            if (!std::isfinite(col[i])) return false;
    }
    return true;
}

void gemm_update(MatrixView c, ConstMatrixView a, ConstMatrixView b) {
    assert(a.rows == c.rows && b.cols == c.cols && a.cols == b.rows);
    const std::size_t m = c.rows, n = c.cols, inner = a.cols;
    for (std::size_t j = 0; j < n; ++j) {
        double* cj = c.data + j * c.ld;
        std::size_t k = 0;
        for (; k + 4 <= inner; k += 4) {
            const double* a0 = a.data + k * a.ld;
            const double* a1 = a0 + a.ld;
            const double* a2 = a1 + a.ld;
            const double* a3 = a2 + a.ld;
            const double b0 = b(k, j), b1 = b(k + 1, j), b2 = b(k + 2, j), b3 = b(k + 3, j);
            for (std::size_t i = 0; i < m; ++i)
                cj[i] -= a0[i] * b0 + a1[i] * b1 + a2[i] * b2 + a3[i] * b3;
        }
        for (; k < inner; ++k) {
            const double* ak = a.data + k * a.ld;
            const double bk = b(k, j);
            for (std::size_t i = 0; i < m; ++i) cj[i] -= ak[i] * bk;
        }
    }
}

void scale(MatrixView m, double factor) {
    for (std::size_t j = 0; j < m.cols; ++j) {
        double* col = m.data + j * m.ld;
        for (std::size_t i = 0; i < m.rows; ++i) col[i] *= factor;
    }
}

void copy_into(MatrixView dst, ConstMatrixView src) {
    assert(dst.rows == src.rows && dst.cols == src.cols);
    for (std::size_t j = 0; j < src.cols; ++j) {
        double* d = dst.data + j * dst.ld;
        const double* s = src.data + j * src.ld;
        std::copy(s, s + src.rows, d);
    }
}

DenseMatrix copy_of(ConstMatrixView src) {
    DenseMatrix m(src.rows, src.cols);
    copy_into(m.view(), src);
    return m;
}

DenseMatrix copy_scaled(ConstMatrixView src, double factor) {
    DenseMatrix m(src.rows, src.cols);
    for (std::size_t j = 0; j < src.cols; ++j)
        for (std::size_t i = 0; i < src.rows; ++i)
            m(i, j) = src(i, j) * factor;
    return m;
}

} // namespace rsylv
