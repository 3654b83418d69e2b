#pragma once

// Self-verification suites driven by the CLI: oracle equivalence of all three
// solvers against a dense Kronecker-system solve, generator residuals, and
// bounded-tile checks under an artificially small overflow threshold.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rsylv/dense_matrix.hpp"
#include "rsylv/partition.hpp"

namespace rsylv {

struct VerifyOptions {
    std::vector<std::size_t> sizes = {6, 10, 16, 24, 32, 40};
    std::size_t systems_per_size = 3;
    std::uint64_t seed = 42;
    std::vector<double> omegas = {1e4};  // bounded-tile suite thresholds
    double mu = 1e-3;                    // growth regime of the bounded-tile suite
    double nu = 1e-2;
    std::size_t growth_size = 100;
    std::size_t tile_size = 8;
    double oracle_tol = 1e-11;
    bool inject_bug = false; // negative control: perturbs one solution entry
};

struct VerifyReport {
    std::string text;
    bool ok = false;
    double min_local_alpha = 1.0;
};

VerifyReport run_verification(const VerifyOptions& opt);

/// Well-conditioned random quasi-triangular matrix with mixed 1x1/2x2 diagonal
/// blocks; eigenvalue real parts lie in [0.5, 1.5] so random A/B pairs always
/// admit a unique solution.
QuasiTriangular random_quasi_triangular(std::mt19937_64& rng, std::size_t n);

DenseMatrix random_dense(std::mt19937_64& rng, std::size_t m, std::size_t n);

/// Independent brute-force reference: forms the mn x mn system
/// I (x) A + B^T (x) I and solves it by Gaussian elimination with partial
/// pivoting. Never calls any of the solver kernels.
DenseMatrix dense_kron_solve(const QuasiTriangular& a, const QuasiTriangular& b,
                             ConstMatrixView c);

} // namespace rsylv
