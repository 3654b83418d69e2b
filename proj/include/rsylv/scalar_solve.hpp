#pragma once

// Reference solvers over the quasi-triangular block structure: a non-robust
// backward substitution and a robust variant with one global running scale.

#include <functional>
#include <span>

#include "rsylv/dense_matrix.hpp"
#include "rsylv/overflow.hpp"
#include "rsylv/partition.hpp"

namespace rsylv {

struct SolveResult {
    double alpha = 1.0; // in (0,1]
    DenseMatrix y;
};

/// Solves A*Y + Y*B = C by block backward substitution. Not robust: entries
/// may overflow to Inf when the solution grows past the floating-point range;
/// that is the point of comparison with the robust solvers. Raises
/// SingularEquationError when a diagonal pair is singular.
DenseMatrix solve_nonrobust(const QuasiTriangular& a, const QuasiTriangular& b,
                            ConstMatrixView c);

/// Solves A*Y + Y*B = alpha*C with a global scaling factor so that no block of
/// Y ever exceeds cfg.omega in inf-norm. Requires every block of A, B and C to
/// have inf-norm <= cfg.omega. When no guard fires, the computation is
/// operation-for-operation identical to solve_nonrobust.
SolveResult solve_robust_scalar(const QuasiTriangular& a, const QuasiTriangular& b,
                                ConstMatrixView c, const OverflowConfig& cfg = {});

namespace detail {

/// Invoked with the full workspace after each mutation step (solve install,
/// column update, row update); used by instrumentation tests.
using ScalarTrace = std::function<void(ConstMatrixView)>;

void nonrobust_inplace(ConstMatrixView a, std::span<const DiagBlock> ablocks,
                       ConstMatrixView b, std::span<const DiagBlock> bblocks,
                       MatrixView y, const OverflowConfig& cfg);

double robust_scalar_inplace(ConstMatrixView a, std::span<const DiagBlock> ablocks,
                             ConstMatrixView b, std::span<const DiagBlock> bblocks,
                             MatrixView y, const OverflowConfig& cfg,
                             const ScalarTrace& trace = {});

} // namespace detail
} // namespace rsylv
