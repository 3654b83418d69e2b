#include "rsylv/scalar_solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsylv/errors.hpp"
#include "rsylv/small_solve.hpp"

namespace rsylv {

namespace detail {

void nonrobust_inplace(ConstMatrixView a, std::span<const DiagBlock> ablocks,
                       ConstMatrixView b, std::span<const DiagBlock> bblocks,
                       MatrixView y, const OverflowConfig& cfg) {
    const std::size_t p = ablocks.size(), q = bblocks.size();
    const std::size_t n = y.cols;
    for (std::size_t lb = 0; lb < q; ++lb) {
        const DiagBlock bl = bblocks[lb];
        for (std::size_t kb = p; kb-- > 0;) {
            const DiagBlock ak = ablocks[kb];
            MatrixView ykl = y.block(ak.start, ak.size, bl.start, bl.size);
            small_sylvester_plain(a.block(ak.start, ak.size, ak.start, ak.size),
                                  b.block(bl.start, bl.size, bl.start, bl.size), ykl, cfg);
            if (ak.start > 0) {
                gemm_update(y.block(0, ak.start, bl.start, bl.size),
                            a.block(0, ak.start, ak.start, ak.size), ykl);
            }
            const std::size_t tail = bl.start + bl.size;
            if (tail < n) {
                gemm_update(y.block(ak.start, ak.size, tail, n - tail), ykl,
                            b.block(bl.start, bl.size, tail, n - tail));
            }
        }
    }
}

namespace {

// multiply all of y by f except the block being installed
void scale_except(MatrixView y, double f, const DiagBlock& rowb, const DiagBlock& colb) {
    for (std::size_t j = 0; j < y.cols; ++j) {
        double* col = y.data + j * y.ld;
        if (j >= colb.start && j < colb.start + colb.size) {
            for (std::size_t i = 0; i < rowb.start; ++i) col[i] *= f;
            for (std::size_t i = rowb.start + rowb.size; i < y.rows; ++i) col[i] *= f;
        } else {
            for (std::size_t i = 0; i < y.rows; ++i) col[i] *= f;
        }
    }
}

void require_blocks_bounded(const char* who, ConstMatrixView m,
                            std::span<const DiagBlock> rows, std::span<const DiagBlock> cols,
                            const OverflowConfig& cfg, bool upper_only) {
    for (std::size_t ib = 0; ib < rows.size(); ++ib)
        for (std::size_t jb = upper_only ? ib : 0; jb < cols.size(); ++jb) {
            const DiagBlock r = rows[ib], c = cols[jb];
            if (!(inf_norm(m.block(r.start, r.size, c.start, c.size)) <= cfg.omega))
                throw std::invalid_argument(std::string(who) +
                                            ": a block norm exceeds omega (or is not finite)");
        }
}

} // namespace

double robust_scalar_inplace(ConstMatrixView a, std::span<const DiagBlock> ablocks,
                             ConstMatrixView b, std::span<const DiagBlock> bblocks,
                             MatrixView y, const OverflowConfig& cfg,
                             const ScalarTrace& trace) {
    require_blocks_bounded("solve_robust_scalar", a, ablocks, ablocks, cfg, true);
    require_blocks_bounded("solve_robust_scalar", b, bblocks, bblocks, cfg, true);
    require_blocks_bounded("solve_robust_scalar", y, ablocks, bblocks, cfg, false);

    const std::size_t p = ablocks.size(), q = bblocks.size();
    const std::size_t n = y.cols;
    double alpha = 1.0;
    const auto rescale_all = [&](double f) {
        alpha = detail::accumulate_scale(alpha, f);
        scale(y, f);
    };

    for (std::size_t lb = 0; lb < q; ++lb) {
        const DiagBlock bl = bblocks[lb];
        for (std::size_t kb = p; kb-- > 0;) {
            const DiagBlock ak = ablocks[kb];
            MatrixView ykl = y.block(ak.start, ak.size, bl.start, bl.size);
            const double beta =
                small_sylvester_guarded(a.block(ak.start, ak.size, ak.start, ak.size),
                                        b.block(bl.start, bl.size, bl.start, bl.size), ykl, cfg);
            if (beta != 1.0) {
                // the block just solved already carries beta; scale the rest
                alpha = detail::accumulate_scale(alpha, beta);
                scale_except(y, beta, ak, bl);
            }
            if (trace) trace(y);

            if (ak.start > 0) {
                MatrixView ycol = y.block(0, ak.start, bl.start, bl.size);
                ConstMatrixView acol = a.block(0, ak.start, ak.start, ak.size);
                const double g1 = protect_update(inf_norm(ycol), inf_norm(acol),
                                                 inf_norm(ykl), cfg);
                if (g1 != 1.0) rescale_all(g1);
                gemm_update(ycol, acol, ykl);
                if (trace) trace(y);
            }

            const std::size_t tail = bl.start + bl.size;
            if (tail < n) {
                // per-block maxima over the remaining row of Y and of B
                double cmax = 0.0, bmax = 0.0;
                for (std::size_t jb = lb + 1; jb < q; ++jb) {
                    const DiagBlock bj = bblocks[jb];
                    cmax = std::max(cmax, inf_norm(y.block(ak.start, ak.size, bj.start, bj.size)));
                    bmax = std::max(bmax, inf_norm(b.block(bl.start, bl.size, bj.start, bj.size)));
                }
                const double g2 = protect_update(cmax, inf_norm(ykl), bmax, cfg);
                if (g2 != 1.0) rescale_all(g2);
                gemm_update(y.block(ak.start, ak.size, tail, n - tail), ykl,
                            b.block(bl.start, bl.size, tail, n - tail));
                if (trace) trace(y);
            }
        }
    }
    return alpha;
}

} // namespace detail

DenseMatrix solve_nonrobust(const QuasiTriangular& a, const QuasiTriangular& b,
                            ConstMatrixView c) {
    if (c.rows != a.dim() || c.cols != b.dim())
        throw std::invalid_argument("solve_nonrobust: C does not conform with A and B");
    DenseMatrix y = copy_of(c);
    detail::nonrobust_inplace(a.view(), a.diag_blocks(), b.view(), b.diag_blocks(),
                              y.view(), OverflowConfig{});
    return y;
}

SolveResult solve_robust_scalar(const QuasiTriangular& a, const QuasiTriangular& b,
                                ConstMatrixView c, const OverflowConfig& cfg) {
    if (c.rows != a.dim() || c.cols != b.dim())
        throw std::invalid_argument("solve_robust_scalar: C does not conform with A and B");
    SolveResult out;
    out.y = copy_of(c);
    out.alpha = detail::robust_scalar_inplace(a.view(), a.diag_blocks(), b.view(),
                                              b.diag_blocks(), out.y.view(), cfg);
    return out;
}

} // namespace rsylv
