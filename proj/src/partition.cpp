#include "rsylv/partition.hpp"

#include <stdexcept>
#include <utility>

namespace rsylv {

QuasiTriangular::QuasiTriangular(DenseMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("QuasiTriangular: matrix must be square");
    const std::size_t n = mat_.rows();
    std::size_t i = 0;
    while (i < n) {
        if (i + 1 < n && mat_(i + 1, i) != 0.0) {
            blocks_.push_back({i, 2});
            i += 2;
        } else {
            blocks_.push_back({i, 1});
            i += 1;
        }
    }
    validate();
}

QuasiTriangular::QuasiTriangular(DenseMatrix m, std::vector<DiagBlock> blocks)
    : mat_(std::move(m)), blocks_(std::move(blocks)) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("QuasiTriangular: matrix must be square");
    std::size_t pos = 0;
    for (const DiagBlock& b : blocks_) {
        if (b.start != pos || (b.size != 1 && b.size != 2))
            throw std::invalid_argument("QuasiTriangular: block list must cover the diagonal in order");
        pos += b.size;
    }
    if (pos != mat_.rows())
        throw std::invalid_argument("QuasiTriangular: block sizes must sum to the dimension");
    validate();
}

void QuasiTriangular::validate() const {
    const std::size_t n = mat_.rows();
    // everything below the first subdiagonal is zero
    for (std::size_t j = 0; j + 2 < n; ++j)
        for (std::size_t i = j + 2; i < n; ++i)
            if (mat_(i, j) != 0.0)
                throw std::invalid_argument("QuasiTriangular: nonzero entry below the first subdiagonal");
    // a nonzero subdiagonal entry appears only inside a declared 2x2 block
    std::vector<bool> in_block(n > 0 ? n - 1 : 0, false);
    for (const DiagBlock& b : blocks_)
        if (b.size == 2) in_block[b.start] = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (mat_(i + 1, i) != 0.0 && !in_block[i])
            throw std::invalid_argument("QuasiTriangular: nonzero subdiagonal outside a declared 2x2 block");
}

BlockPartition::BlockPartition(std::vector<std::size_t> cuts) : cuts_(std::move(cuts)) {
    if (cuts_.empty() || cuts_.front() != 0)
        throw std::invalid_argument("BlockPartition: cuts must start at 0");
    for (std::size_t t = 0; t + 1 < cuts_.size(); ++t)
        if (cuts_[t + 1] <= cuts_[t])
            throw std::invalid_argument("BlockPartition: cuts must be strictly increasing");
}

namespace {

bool splits_block(const QuasiTriangular& t, std::size_t cut) {
    for (const DiagBlock& b : t.diag_blocks())
        if (b.size == 2 && cut == b.start + 1) return true;
    return false;
}

} // namespace

BlockPartition partition(const QuasiTriangular& t, std::size_t requested_tile_size) {
    if (requested_tile_size < 2)
        throw std::invalid_argument("partition: requested tile size must be >= 2");
    const std::size_t n = t.dim();
    std::vector<std::size_t> cuts{0};
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t next = pos + requested_tile_size;
        if (next >= n) {
            next = n;
        } else if (splits_block(t, next)) {
            ++next;
        }
        cuts.push_back(next);
        pos = next;
    }
    return BlockPartition(std::move(cuts));
}

std::vector<DiagBlock> blocks_in_range(const QuasiTriangular& t, std::size_t lo, std::size_t hi) {
    std::vector<DiagBlock> out;
    for (const DiagBlock& b : t.diag_blocks()) {
        if (b.start >= hi) break;
        if (b.start + b.size <= lo) continue;
        if (b.start < lo || b.start + b.size > hi)
            throw std::invalid_argument("blocks_in_range: range splits a diagonal block");
        out.push_back({b.start - lo, b.size});
    }
    return out;
}

} // namespace rsylv
