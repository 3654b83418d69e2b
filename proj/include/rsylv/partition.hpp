#pragma once

// Quasi-triangular structure (real Schur shape) and the tile partitioner that
// never splits a 2x2 diagonal block.

#include <cstddef>
#include <span>
#include <vector>

#include "rsylv/dense_matrix.hpp"

namespace rsylv {

/// One diagonal block of a quasi-triangular matrix: size is 1 or 2.
struct DiagBlock {
    std::size_t start = 0;
    std::size_t size = 1;
};

/// Square matrix that is upper triangular except for non-overlapping 2x2
/// diagonal blocks. The block list covers the whole diagonal in order.
class QuasiTriangular {
public:
    /// Takes ownership and detects 2x2 blocks from exactly nonzero subdiagonal
    /// entries (quasi-triangular inputs are constructed, not computed, so an
    /// exact-zero test is appropriate).
    explicit QuasiTriangular(DenseMatrix m);

    /// Takes ownership with explicit block metadata; validates the shape.
    QuasiTriangular(DenseMatrix m, std::vector<DiagBlock> blocks);

    std::size_t dim() const { return mat_.rows(); }
    const DenseMatrix& matrix() const { return mat_; }
    ConstMatrixView view() const { return mat_.view(); }
    std::span<const DiagBlock> diag_blocks() const { return blocks_; }

private:
    void validate() const;

    DenseMatrix mat_;
    std::vector<DiagBlock> blocks_;
};

/// Strictly increasing cut points from 0 to the matrix dimension.
class BlockPartition {
public:
    explicit BlockPartition(std::vector<std::size_t> cuts);

    const std::vector<std::size_t>& cuts() const { return cuts_; }
    std::size_t block_count() const { return cuts_.size() - 1; }
    std::size_t start(std::size_t t) const { return cuts_[t]; }
    std::size_t size(std::size_t t) const { return cuts_[t + 1] - cuts_[t]; }

private:
    std::vector<std::size_t> cuts_;
};

/// Cuts at running multiples of the requested tile size; a cut that would
/// split a 2x2 diagonal block is moved one index later. Requires
/// requested_tile_size >= 2.
BlockPartition partition(const QuasiTriangular& t, std::size_t requested_tile_size);

/// Diagonal blocks of t falling inside [lo, hi), rebased to lo. The range must
/// not split a block.
std::vector<DiagBlock> blocks_in_range(const QuasiTriangular& t, std::size_t lo, std::size_t hi);

} // namespace rsylv
