#include "rsylv/tile_grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsylv {

TileGrid::TileGrid(const QuasiTriangular& a, const QuasiTriangular& b, ConstMatrixView c,
                   std::size_t tile_size)
    : rows_(partition(a, tile_size)), cols_(partition(b, tile_size)), workspace_(copy_of(c)) {
    if (c.rows != a.dim() || c.cols != b.dim())
        throw std::invalid_argument("TileGrid: C does not conform with A and B");
    const std::size_t m = row_tiles(), n = col_tiles();
    scale_.assign(m * n, 1.0);
    norm_.assign(m * n, 0.0);
    a_bound_.assign(m * m, 0.0);
    b_bound_.assign(n * n, 0.0);
    locks_ = std::make_unique<std::mutex[]>(m * n);
    row_blocks_.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
        row_blocks_.push_back(blocks_in_range(a, rows_.start(k), rows_.start(k) + rows_.size(k)));
    col_blocks_.reserve(n);
    for (std::size_t l = 0; l < n; ++l)
        col_blocks_.push_back(blocks_in_range(b, cols_.start(l), cols_.start(l) + cols_.size(l)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
            norm_[idx(k, l)] = inf_norm(tile(k, l));
}

MatrixView TileGrid::tile(std::size_t k, std::size_t l) {
    return workspace_.block(rows_.start(k), rows_.size(k), cols_.start(l), cols_.size(l));
}

ConstMatrixView TileGrid::tile(std::size_t k, std::size_t l) const {
    return workspace_.block(rows_.start(k), rows_.size(k), cols_.start(l), cols_.size(l));
}

double TileGrid::min_scale() const {
    double alpha = 1.0;
    for (double s : scale_) alpha = std::min(alpha, s);
    return alpha;
}

void TileGrid::consistency_scale_tile(std::size_t k, std::size_t l, double alpha) {
    const double f = alpha / tile_scale(k, l);
    if (f != 1.0) {
        MatrixView t = tile(k, l);
        scale(t, f);
        set_tile_norm(k, l, inf_norm(t));
    }
    set_tile_scale(k, l, alpha);
}

void compute_bounds(const QuasiTriangular& a, const QuasiTriangular& b, TileGrid& grid,
                    const OverflowConfig& cfg) {
    const std::size_t m = grid.row_tiles(), n = grid.col_tiles();
    const BlockPartition& rp = grid.row_partition();
    const BlockPartition& cp = grid.col_partition();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i; k < m; ++k) {
            const double v = inf_norm(a.view().block(rp.start(i), rp.size(i),
                                                     rp.start(k), rp.size(k)));
            if (!(v <= cfg.omega))
                throw std::invalid_argument("compute_bounds: a tile norm of A exceeds omega");
            grid.set_a_bound(i, k, v);
        }
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = l; j < n; ++j) {
            const double v = inf_norm(b.view().block(cp.start(l), cp.size(l),
                                                     cp.start(j), cp.size(j)));
            if (!(v <= cfg.omega))
                throw std::invalid_argument("compute_bounds: a tile norm of B exceeds omega");
            grid.set_b_bound(l, j, v);
        }
}

std::pair<double, DenseMatrix> reduce_and_scale(TileGrid& grid) {
    const double alpha = grid.min_scale();
    for (std::size_t k = 0; k < grid.row_tiles(); ++k)
        for (std::size_t l = 0; l < grid.col_tiles(); ++l)
            grid.consistency_scale_tile(k, l, alpha);
    return {alpha, grid.take_workspace()};
}

} // namespace rsylv
