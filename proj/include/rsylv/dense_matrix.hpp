#pragma once

// Column-major dense matrix storage with zero-copy sub-matrix views and the
// few kernels the solvers are built on.

#include <cassert>
#include <cstddef>
#include <vector>

namespace rsylv {

struct ConstMatrixView {
    const double* data = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t ld = 1; // column stride, >= rows

    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows && j < cols);
        return data[i + j * ld];
    }

    bool empty() const { return rows == 0 || cols == 0; }

    ConstMatrixView block(std::size_t i0, std::size_t nrows,
                          std::size_t j0, std::size_t ncols) const {
        assert(i0 + nrows <= rows && j0 + ncols <= cols);
        return {data + i0 + j0 * ld, nrows, ncols, ld};
    }
};

struct MatrixView {
    double* data = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t ld = 1;

    double& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows && j < cols);
        return data[i + j * ld];
    }

    bool empty() const { return rows == 0 || cols == 0; }

    MatrixView block(std::size_t i0, std::size_t nrows,
                     std::size_t j0, std::size_t ncols) const {
        assert(i0 + nrows <= rows && j0 + ncols <= cols);
        return {data + i0 + j0 * ld, nrows, ncols, ld};
    }

    operator ConstMatrixView() const { return {data, rows, cols, ld}; }
};

class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t ld() const { return rows_; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i + j * rows_];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i + j * rows_];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    MatrixView view() { return {data_.data(), rows_, cols_, rows_}; }
    ConstMatrixView view() const { return {data_.data(), rows_, cols_, rows_}; }
    ConstMatrixView cview() const { return view(); }

    MatrixView block(std::size_t i0, std::size_t nrows, std::size_t j0, std::size_t ncols) {
        return view().block(i0, nrows, j0, ncols);
    }
    ConstMatrixView block(std::size_t i0, std::size_t nrows, std::size_t j0, std::size_t ncols) const {
        return view().block(i0, nrows, j0, ncols);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Max absolute row sum; 0 for an empty view.
double inf_norm(ConstMatrixView m);

/// Square root of the sum of squared entries.
double frob_norm(ConstMatrixView m);

/// Largest |entry|; 0 for an empty view.
double max_abs(ConstMatrixView m);

bool all_finite(ConstMatrixView m);

/// C <- C - A*B. Views must conform and not alias.
void gemm_update(MatrixView c, ConstMatrixView a, ConstMatrixView b);

void scale(MatrixView m, double factor);

void copy_into(MatrixView dst, ConstMatrixView src);

DenseMatrix copy_of(ConstMatrixView src);

DenseMatrix copy_scaled(ConstMatrixView src, double factor);

} // namespace rsylv
