#pragma once

// Robust augmented-tile update: <gamma,C> <- <gamma,C> - <alpha,A><beta,B>,
// where <s,X> represents the scaled matrix s^-1 X.

#include "rsylv/dense_matrix.hpp"
#include "rsylv/overflow.hpp"

namespace rsylv {

/// Mutable augmented tile: scale factor, tile view, cached inf-norm.
struct Augmented {
    double scale = 1.0;
    MatrixView tile;
    double norm = 0.0;
};

/// Read-only augmented tile.
struct ConstAugmented {
    double scale = 1.0;
    ConstMatrixView tile;
    double norm = 0.0;
};

/// In place on c.tile. Computes eta = min of the three scales, a guard factor
/// zeta so that the update cannot exceed omega, and the result scale
/// delta = eta*zeta; then D = (delta/gamma) C - (delta/(alpha*beta)) A*B with
/// factor-1 scalings elided, so equivalent inputs map to equivalent outputs:
/// delta^-1 D = gamma^-1 C - (alpha^-1 A)(beta^-1 B) in exact arithmetic.
/// Updates c.scale and recomputes c.norm. Scales must lie in
/// [smallest-normal, 1]; tile norms must not exceed omega.
void robust_update(Augmented& c, const ConstAugmented& a, const ConstAugmented& b,
                   const OverflowConfig& cfg);

} // namespace rsylv
