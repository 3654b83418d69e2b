#include "rsylv/tiled_solve.hpp"

#include <atomic>
#include <memory>
#include <stdexcept>

#include "rsylv/robust_update.hpp"
#include "rsylv/task_pool.hpp"
#include "rsylv/tile_grid.hpp"

namespace rsylv {

namespace {

struct Engine {
    TileGrid& grid;
    ConstMatrixView a;
    ConstMatrixView b;
    const OverflowConfig& cfg;
    const TileProbe& probe;

    ConstMatrixView a_tile(std::size_t i, std::size_t k) const {
        const BlockPartition& p = grid.row_partition();
        return a.block(p.start(i), p.size(i), p.start(k), p.size(k));
    }
    ConstMatrixView b_tile(std::size_t l, std::size_t j) const {
        const BlockPartition& p = grid.col_partition();
        return b.block(p.start(l), p.size(l), p.start(j), p.size(j));
    }

    // RobustSyl on the diagonal-pair subproblem; the solve's scaling chains
    // onto whatever the tile accumulated from earlier updates
    void solve_tile(std::size_t k, std::size_t l) {
        MatrixView ykl = grid.tile(k, l);
        double beta = detail::robust_scalar_inplace(
            a_tile(k, k), grid.row_tile_blocks(k), b_tile(l, l), grid.col_tile_blocks(l),
            ykl, cfg);
        double norm = inf_norm(ykl);
        if (norm > cfg.omega) {
            // the per-tile solve bounds blocks of its own partition; a tile row
            // crosses many blocks, so the whole-tile norm needs its own scaling
            const double zeta = detail::update_scale(static_cast<long double>(norm), cfg);
            scale(ykl, zeta);
            beta = detail::accumulate_scale(beta, zeta);
            norm = inf_norm(ykl);
        }
        grid.set_tile_scale(k, l, detail::accumulate_scale(grid.tile_scale(k, l), beta));
        grid.set_tile_norm(k, l, norm);
        if (probe) probe(k, l, grid.tile_scale(k, l), grid.tile_norm(k, l));
    }

    // <alpha_il, Y_il> <- RobustUpdate(<alpha_il, Y_il>, <1, A_ik>, <alpha_kl, Y_kl>)
    void column_update(std::size_t i, std::size_t l, std::size_t k) {
        Augmented dest{grid.tile_scale(i, l), grid.tile(i, l), grid.tile_norm(i, l)};
        const ConstAugmented asrc{1.0, a_tile(i, k), grid.a_bound(i, k)};
        const ConstAugmented ysrc{grid.tile_scale(k, l), grid.tile(k, l), grid.tile_norm(k, l)};
        robust_update(dest, asrc, ysrc, cfg);
        grid.set_tile_scale(i, l, dest.scale);
        grid.set_tile_norm(i, l, dest.norm);
        if (probe) probe(i, l, dest.scale, dest.norm);
    }

    // <alpha_kj, Y_kj> <- RobustUpdate(<alpha_kj, Y_kj>, <alpha_kl, Y_kl>, <1, B_lj>)
    void row_update(std::size_t k, std::size_t j, std::size_t l) {
        Augmented dest{grid.tile_scale(k, j), grid.tile(k, j), grid.tile_norm(k, j)};
        const ConstAugmented ysrc{grid.tile_scale(k, l), grid.tile(k, l), grid.tile_norm(k, l)};
        const ConstAugmented bsrc{1.0, b_tile(l, j), grid.b_bound(l, j)};
        robust_update(dest, ysrc, bsrc, cfg);
        grid.set_tile_scale(k, j, dest.scale);
        grid.set_tile_norm(k, j, dest.norm);
        if (probe) probe(k, j, dest.scale, dest.norm);
    }

    void require_rhs_bounded() const {
        for (std::size_t k = 0; k < grid.row_tiles(); ++k)
            for (std::size_t l = 0; l < grid.col_tiles(); ++l)
                if (!(grid.tile_norm(k, l) <= cfg.omega))
                    throw std::invalid_argument(
                        "solve_tiled_robust: a tile norm of C exceeds omega");
    }
};

SolveResult run_sequential(Engine& eng, const QuasiTriangular& a, const QuasiTriangular& b) {
    compute_bounds(a, b, eng.grid, eng.cfg);
    eng.require_rhs_bounded();
    const std::size_t m = eng.grid.row_tiles(), n = eng.grid.col_tiles();
    for (std::size_t k = m; k-- > 0;) {
        for (std::size_t l = 0; l < n; ++l) {
            eng.solve_tile(k, l);
            for (std::size_t i = k; i-- > 0;) eng.column_update(i, l, k);
            for (std::size_t j = l + 1; j < n; ++j) eng.row_update(k, j, l);
        }
    }
    auto [alpha, y] = reduce_and_scale(eng.grid);
    return {alpha, std::move(y)};
}

SolveResult run_parallel(Engine& eng, const QuasiTriangular& a, const QuasiTriangular& b,
                         std::size_t workers) {
    TileGrid& grid = eng.grid;
    const std::size_t m = grid.row_tiles(), n = grid.col_tiles();
    TaskPool pool(workers);

    // bound phase: perfectly parallel, one task per table row
    for (std::size_t i = 0; i < m; ++i)
        pool.submit([&, i] {
            const BlockPartition& p = grid.row_partition();
            for (std::size_t k = i; k < m; ++k) {
                const double v = inf_norm(a.view().block(p.start(i), p.size(i),
                                                         p.start(k), p.size(k)));
                if (!(v <= eng.cfg.omega))
                    throw std::invalid_argument("compute_bounds: a tile norm of A exceeds omega");
                grid.set_a_bound(i, k, v);
            }
        });
    for (std::size_t l = 0; l < n; ++l)
        pool.submit([&, l] {
            const BlockPartition& p = grid.col_partition();
            for (std::size_t j = l; j < n; ++j) {
                const double v = inf_norm(b.view().block(p.start(l), p.size(l),
                                                         p.start(j), p.size(j)));
                if (!(v <= eng.cfg.omega))
                    throw std::invalid_argument("compute_bounds: a tile norm of B exceeds omega");
                grid.set_b_bound(l, j, v);
            }
        });
    pool.wait_idle(); // bounds complete before any solve/update starts
    eng.require_rhs_bounded();

    // tile (k,l) waits for one update per solved tile below in its column and
    // one per solved tile to its left in its row
    auto pending = std::make_unique<std::atomic<int>[]>(m * n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
            pending[k * n + l].store(static_cast<int>((m - 1 - k) + l), std::memory_order_relaxed);

    // solve and update tasks submit each other; declared up front
    std::function<void(std::size_t, std::size_t)> submit_solve;

    auto finish_update = [&](std::size_t k, std::size_t l) {
        if (pending[k * n + l].fetch_sub(1, std::memory_order_acq_rel) == 1)
            submit_solve(k, l);
    };

    submit_solve = [&](std::size_t k, std::size_t l) {
        pool.submit([&, k, l] {
            eng.solve_tile(k, l);
            for (std::size_t i = k; i-- > 0;) {
                pool.submit([&, i, l, k] {
                    {
                        std::lock_guard<std::mutex> hold(grid.tile_lock(i, l));
                        eng.column_update(i, l, k);
                    }
                    finish_update(i, l);
                });
            }
            for (std::size_t j = l + 1; j < n; ++j) {
                pool.submit([&, k, j, l] {
                    {
                        std::lock_guard<std::mutex> hold(grid.tile_lock(k, j));
                        eng.row_update(k, j, l);
                    }
                    finish_update(k, j);
                });
            }
        });
    };

    if (m > 0 && n > 0) submit_solve(m - 1, 0);
    pool.wait_idle(); // all tiles solved before the reduction

    const double alpha = grid.min_scale(); // reduced sequentially
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l)
            pool.submit([&, k, l] { grid.consistency_scale_tile(k, l, alpha); });
    pool.wait_idle();

    return {alpha, grid.take_workspace()};
}

} // namespace

SolveResult solve_tiled_robust(const QuasiTriangular& a, const QuasiTriangular& b,
                               ConstMatrixView c, std::size_t tile_size,
                               const OverflowConfig& cfg, ExecutionMode mode,
                               const TileProbe& probe) {
    if (c.rows != a.dim() || c.cols != b.dim())
        throw std::invalid_argument("solve_tiled_robust: C does not conform with A and B");

    TileGrid grid(a, b, c, tile_size);
    Engine eng{grid, a.view(), b.view(), cfg, probe};
    if (mode.is_parallel()) return run_parallel(eng, a, b, mode.workers);
    return run_sequential(eng, a, b);
}

} // namespace rsylv
