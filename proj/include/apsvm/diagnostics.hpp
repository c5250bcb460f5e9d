#pragma once

#include "apsvm/kernels.hpp"
#include "apsvm/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace apsvm {

/// Monte-Carlo check that equal-size normal subsamples have smaller kernel
/// determinants than anomalous ones.
///
/// The expectation of det K_Z / det K_A is estimated in log space: each draw
/// contributes log det K_Z - log det K_A, and ratio_estimate is the exponential
/// of their mean (a geometric-mean estimate). epsilon_satisfied holds when the
/// estimate is below one.
struct HeterogeneityReport {
    std::size_t m = 0;
    std::size_t n_draws = 0;
    double mean_log_det_ratio = 0.0;
    /// Standard error of the mean over the accepted draws (0 with a single draw).
    double std_error = 0.0;
    double ratio_estimate = 1.0;
    bool epsilon_satisfied = false;
    /// Accepted draws only, in draw order.
    std::vector<double> per_draw_log_ratios;
    /// Draws whose regularized Gram was not numerically positive definite.
    std::vector<std::size_t> flagged_draws;
};

inline constexpr double kLogDetRidge = 1e-10;

/// Draws are independent: draw d uses the stream derive_stream(seed, d) and may
/// run on any thread; aggregation is in draw order.
HeterogeneityReport heterogeneity_check(const SampleMatrix& normals, const SampleMatrix& anomalous, const KernelSpec& spec,
                                        std::size_t m, std::size_t n_draws, std::uint64_t seed, double ridge = kLogDetRidge);

namespace detail {

/// log det(K_Z) - log det(K_A) for one draw, or nullopt if either Cholesky factorization fails.
std::optional<double> draw_log_det_ratio(const SampleMatrix& normals, const SampleMatrix& anomalous, const KernelSpec& spec,
                                         std::size_t m, std::uint64_t seed, std::size_t draw, double ridge);

HeterogeneityReport aggregate(std::size_t m, const std::vector<std::optional<double>>& draws);

} // namespace detail

/// log det(K + ridge I) by Cholesky; nullopt when K + ridge I is not numerically PD.
std::optional<double> log_det(const Matrix& k, double ridge);

/// Eigenvalues of a symmetric matrix, largest first.
Vector eigen_spectrum(const Matrix& k);

struct PcaEmbedding {
    Matrix scores;     ///< samples x dims
    Matrix directions; ///< p x dims, unit columns
    Vector variances;  ///< per-component sample variance (n - 1 denominator), non-increasing
};

/// Centered PCA scores on the top `dims` principal directions. Each direction is
/// oriented so that its largest-magnitude entry is positive.
PcaEmbedding pca_embed(const SampleMatrix& samples, Eigen::Index dims = 2);

} // namespace apsvm
