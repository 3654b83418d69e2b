#pragma once

// Solve of Sylvester blocks with A and B at most 2x2, via Gaussian
// elimination with complete pivoting on the associated Kronecker system
// (I (x) A + B^T (x) I) vec(Z) = vec(C) of size at most 4.

#include "rsylv/dense_matrix.hpp"
#include "rsylv/overflow.hpp"

namespace rsylv {

struct ScaledSolve {
    double beta = 1.0; // in (0,1]
    DenseMatrix z;     // inf_norm(z) <= omega
};

/// Solves A*Z + Z*B = beta*C robustly: every division is guarded with
/// protect_division and every right-hand-side update with the update guard;
/// all scalings fold into beta. A pivot below cfg.small_num raises
/// SingularEquationError (the equation has no unique solution).
ScaledSolve solve_small_sylvester(ConstMatrixView a, ConstMatrixView b,
                                  ConstMatrixView c, const OverflowConfig& cfg);

namespace detail {

/// In-place guarded flavor: writes Z over c and returns beta.
double small_sylvester_guarded(ConstMatrixView a, ConstMatrixView b, MatrixView c,
                               const OverflowConfig& cfg);

/// In-place plain flavor: identical elimination with the guards absent, as the
/// non-robust algorithm requires. No input validation; overflowed right-hand
/// sides propagate. Pivot singularity is still detected (the Kronecker matrix
/// is built from A and B only).
void small_sylvester_plain(ConstMatrixView a, ConstMatrixView b, MatrixView c,
                           const OverflowConfig& cfg);

} // namespace detail
} // namespace rsylv
