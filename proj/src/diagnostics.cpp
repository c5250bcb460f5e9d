#include "apsvm/diagnostics.hpp"

#include "apsvm/error.hpp"
#include "apsvm/random.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace apsvm {

namespace {

SampleMatrix subsample(const SampleMatrix& from, const std::vector<std::size_t>& rows) {
    SampleMatrix out(static_cast<Eigen::Index>(rows.size()), from.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = from.row(static_cast<Eigen::Index>(rows[k]));
    return out;
}

} // namespace

std::optional<double> log_det(const Matrix& k, double ridge) {
    Matrix a = k;
    a.diagonal().array() += ridge;
    Eigen::LLT<Matrix> llt(a);
    if (llt.info() != Eigen::Success) return std::nullopt;
    const Vector diag = llt.matrixL().toDenseMatrix().diagonal();
    if (!(diag.array() > 0.0).all()) return std::nullopt;
    const double value = 2.0 * diag.array().log().sum();
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

namespace detail {

std::optional<double> draw_log_det_ratio(const SampleMatrix& normals, const SampleMatrix& anomalous, const KernelSpec& spec,
                                         std::size_t m, std::uint64_t seed, std::size_t draw, double ridge) {
    Rng rng(derive_stream(seed, draw));
    const auto zi = rng.sample_without_replacement(static_cast<std::size_t>(normals.rows()), m);
    const auto ai = rng.sample_without_replacement(static_cast<std::size_t>(anomalous.rows()), m);
    const auto z = log_det(gram_matrix(spec, subsample(normals, zi)), ridge);
    const auto a = log_det(gram_matrix(spec, subsample(anomalous, ai)), ridge);
    if (!z || !a) return std::nullopt;
    return *z - *a;
}

HeterogeneityReport aggregate(std::size_t m, const std::vector<std::optional<double>>& draws) {
    HeterogeneityReport report;
    report.m = m;
    report.n_draws = draws.size();
    for (std::size_t d = 0; d < draws.size(); ++d) {
        if (draws[d])
            report.per_draw_log_ratios.push_back(*draws[d]);
        else
            report.flagged_draws.push_back(d);
    }
    const auto& v = report.per_draw_log_ratios;
    if (v.empty()) throw NumericalError("heterogeneity check: every draw produced a singular kernel matrix");
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    report.mean_log_det_ratio = mean;
    report.std_error = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size())) : 0.0;
    report.ratio_estimate = std::exp(mean);
    report.epsilon_satisfied = report.ratio_estimate < 1.0;
    return report;
}

} // namespace detail

HeterogeneityReport heterogeneity_check(const SampleMatrix& normals, const SampleMatrix& anomalous, const KernelSpec& spec,
                                        std::size_t m, std::size_t n_draws, std::uint64_t seed, double ridge) {
    validate_samples(normals, "normal samples");
    validate_samples(anomalous, "anomalous samples");
    if (normals.cols() != anomalous.cols()) throw InputError("heterogeneity check: sample sets differ in dimension");
    if (m == 0) throw InputError("heterogeneity check: m must be at least 1");
    if (m > static_cast<std::size_t>(std::min(normals.rows(), anomalous.rows())))
        throw InputError("heterogeneity check: m = " + std::to_string(m) + " exceeds the smaller class size");
    if (n_draws == 0) throw InputError("heterogeneity check: need at least one draw");

    std::vector<std::optional<double>> draws(n_draws);
    const auto total = static_cast<long>(n_draws);
#pragma omp parallel for schedule(static)
    for (long d = 0; d < total; ++d)
        draws[static_cast<std::size_t>(d)] =
            detail::draw_log_det_ratio(normals, anomalous, spec, m, seed, static_cast<std::size_t>(d), ridge);
    return detail::aggregate(m, draws);
}

Vector eigen_spectrum(const Matrix& k) {
    if (k.rows() != k.cols() || k.rows() == 0) throw InputError("eigen_spectrum: matrix must be square and nonempty");
    if (!k.allFinite()) throw NumericalError("eigen_spectrum: non-finite matrix entries");
    const double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
    if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) throw InputError("eigen_spectrum: matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(k, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw NumericalError("eigen_spectrum: eigendecomposition failed");
    return eig.eigenvalues().reverse();
}

PcaEmbedding pca_embed(const SampleMatrix& samples, Eigen::Index dims) {
    validate_samples(samples, "pca samples");
    const Eigen::Index n = samples.rows();
    const Eigen::Index p = samples.cols();
    if (dims < 1) throw InputError("pca_embed: dims must be at least 1");
    if (n < dims + 1) throw InputError("pca_embed: need at least dims + 1 samples");
    if (dims > p) throw InputError("pca_embed: dims exceeds the feature count");

    const Eigen::RowVectorXd mean = samples.colwise().mean();
    const Matrix centered = samples.rowwise() - mean;
    const double scale = std::max(1.0, samples.cwiseAbs().maxCoeff());
    if (centered.cwiseAbs().maxCoeff() <= 1e-14 * scale) throw DegenerateDataError("pca_embed: data has zero variance");

    Eigen::BDCSVD<Matrix> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
    PcaEmbedding out;
    out.directions = svd.matrixV().leftCols(dims);
    for (Eigen::Index c = 0; c < dims; ++c) {
        Eigen::Index arg = 0;
        out.directions.col(c).cwiseAbs().maxCoeff(&arg);
        if (out.directions(arg, c) < 0.0) out.directions.col(c) *= -1.0;
    }
    out.scores = centered * out.directions;
    out.variances = svd.singularValues().head(dims).array().square() / static_cast<double>(n - 1);
    return out;
}

} // namespace apsvm
