#pragma once

// Tile-level state for the tiled robust solver: the Y workspace with one
// augmented tile (scale factor + cached inf-norm) per tile, precomputed
// operand norm tables for A and B, and one exclusive-access lock per tile.

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "rsylv/dense_matrix.hpp"
#include "rsylv/overflow.hpp"
#include "rsylv/partition.hpp"

namespace rsylv {

class TileGrid {
public:
    TileGrid(const QuasiTriangular& a, const QuasiTriangular& b, ConstMatrixView c,
             std::size_t tile_size);

    std::size_t row_tiles() const { return rows_.block_count(); }
    std::size_t col_tiles() const { return cols_.block_count(); }
    const BlockPartition& row_partition() const { return rows_; }
    const BlockPartition& col_partition() const { return cols_; }

    MatrixView tile(std::size_t k, std::size_t l);
    ConstMatrixView tile(std::size_t k, std::size_t l) const;

    double tile_scale(std::size_t k, std::size_t l) const { return scale_[idx(k, l)]; }
    void set_tile_scale(std::size_t k, std::size_t l, double v) { scale_[idx(k, l)] = v; }
    double tile_norm(std::size_t k, std::size_t l) const { return norm_[idx(k, l)]; }
    void set_tile_norm(std::size_t k, std::size_t l, double v) { norm_[idx(k, l)] = v; }
    std::mutex& tile_lock(std::size_t k, std::size_t l) { return locks_[idx(k, l)]; }

    /// ||A tile(i,k)||inf for i <= k; valid once the bound phase has run.
    double a_bound(std::size_t i, std::size_t k) const { return a_bound_[i * row_tiles() + k]; }
    void set_a_bound(std::size_t i, std::size_t k, double v) { a_bound_[i * row_tiles() + k] = v; }
    double b_bound(std::size_t l, std::size_t j) const { return b_bound_[l * col_tiles() + j]; }
    void set_b_bound(std::size_t l, std::size_t j, double v) { b_bound_[l * col_tiles() + j] = v; }

    /// Diagonal blocks of A inside row tile k, rebased to the tile.
    std::span<const DiagBlock> row_tile_blocks(std::size_t k) const { return row_blocks_[k]; }
    std::span<const DiagBlock> col_tile_blocks(std::size_t l) const { return col_blocks_[l]; }

    /// Sequential reduction of the local scale factors.
    double min_scale() const;

    /// Consistency scaling of one tile: multiply by alpha/alpha_kl (elided when
    /// the factor is exactly 1) and refresh the cached norm.
    void consistency_scale_tile(std::size_t k, std::size_t l, double alpha);

    DenseMatrix take_workspace() { return std::move(workspace_); }

private:
    std::size_t idx(std::size_t k, std::size_t l) const { return k * col_tiles() + l; }

    BlockPartition rows_;
    BlockPartition cols_;
    DenseMatrix workspace_;
    std::vector<double> scale_;
    std::vector<double> norm_;
    std::vector<double> a_bound_;
    std::vector<double> b_bound_;
    std::unique_ptr<std::mutex[]> locks_;
    std::vector<std::vector<DiagBlock>> row_blocks_;
    std::vector<std::vector<DiagBlock>> col_blocks_;
};

/// Fills the norm tables of the grid (the bound phase). Every recorded tile
/// norm of A and B must be <= cfg.omega, else invalid_argument.
void compute_bounds(const QuasiTriangular& a, const QuasiTriangular& b, TileGrid& grid,
                    const OverflowConfig& cfg);

/// Global alpha = min over all local scale factors, then every tile is
/// multiplied by alpha/alpha_kl. Requires all solve/update work complete.
std::pair<double, DenseMatrix> reduce_and_scale(TileGrid& grid);

} // namespace rsylv
