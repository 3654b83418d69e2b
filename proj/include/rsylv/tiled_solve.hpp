#pragma once

// Tiled robust triangular Sylvester solver: per-tile local scaling factors,
// task-parallel execution with per-tile exclusive-write locking, a norm
// precomputation phase, sequential reduction of the local scale factors, and
// a final consistency scaling.

#include <functional>

#include "rsylv/overflow.hpp"
#include "rsylv/partition.hpp"
#include "rsylv/scalar_solve.hpp"

namespace rsylv {

struct ExecutionMode {
    std::size_t workers = 0; // 0: sequential reference order

    static ExecutionMode sequential() { return {0}; }
    static ExecutionMode parallel(std::size_t w) { return {w}; }
    bool is_parallel() const { return workers > 0; }
};

/// Invoked each time a tile comes to rest (its exclusive access ends) with
/// (row tile, col tile, local scale, cached inf-norm). Must be thread-safe in
/// parallel mode. Disabled by default.
using TileProbe = std::function<void(std::size_t, std::size_t, double, double)>;

/// Solves A*Y + Y*B = alpha*C with every tile of Y bounded by cfg.omega in
/// inf-norm. Sequential mode executes the tile loop nest in a fixed order and
/// is fully deterministic; parallel mode runs one task per tile solve and per
/// tile update on a pool of `workers` threads, serializing writes to a tile
/// with its lock. A solved tile is immutable until the consistency scaling,
/// so tasks read completed tiles without locking and hold at most one lock at
/// a time.
SolveResult solve_tiled_robust(const QuasiTriangular& a, const QuasiTriangular& b,
                               ConstMatrixView c, std::size_t tile_size,
                               const OverflowConfig& cfg = {},
                               ExecutionMode mode = ExecutionMode::sequential(),
                               const TileProbe& probe = {});

} // namespace rsylv
