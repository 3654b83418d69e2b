#pragma once

// Parameterized quasi-triangular test systems with controlled growth, and the
// scaled relative residual used to judge solver output.

#include <cstddef>
#include <vector>

#include "rsylv/dense_matrix.hpp"
#include "rsylv/partition.hpp"

namespace rsylv {

struct GeneratorSpec {
    std::size_t n = 0;
    double mu = 1.0;                  // magnitude of the diagonal entries
    std::vector<std::size_t> pattern; // diagonal block sizes over {1,2}, summing to n
};

/// Alternating 1,2,1,2,... block sizes, truncated to fit n.
std::vector<std::size_t> mixed_pattern(std::size_t n);

/// All 1x1 blocks (plain triangular).
std::vector<std::size_t> ones_pattern(std::size_t n);

/// Ones on the strict upper triangle outside the diagonal blocks; diagonal
/// blocks mu*[1] or mu*[[1,1],[-1,1]]; zeros elsewhere.
QuasiTriangular generate_quasi_triangular(const GeneratorSpec& spec);

/// All-ones m x n right-hand side.
DenseMatrix generate_rhs(std::size_t m, std::size_t n);

/// ||alpha*C - (A*Y + Y*B)||_F / ((||A||_F + ||B||_F)*||Y||_F + ||alpha*C||_F).
/// Raises UndefinedResidualError when the denominator is identically zero.
double relative_residual(ConstMatrixView a, ConstMatrixView b, ConstMatrixView c,
                         ConstMatrixView y, double alpha);

} // namespace rsylv
