#include "apsvm/reference.hpp"

#include "apsvm/error.hpp"

namespace apsvm::reference {

Matrix gram_matrix(const KernelSpec& spec, const SampleMatrix& a, const SampleMatrix& b) {
    validate_samples(a, "gram_matrix rows");
    validate_samples(b, "gram_matrix columns");
    if (a.cols() != b.cols()) throw InputError("gram_matrix: sample sets differ in dimension");
    Matrix out(a.rows(), b.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.rows(); ++j) out(i, j) = spec.evaluate_unchecked(row_view(a, i), row_view(b, j));
    return out;
}

Matrix indirect_gram(const IndirectKernelContext& ctx, const SampleMatrix& a) {
    const Matrix ks = reference::gram_matrix(ctx.spec(), a, ctx.normals());
    const Matrix& pinv = ctx.pseudo_inverse();
    const Eigen::Index n = ks.rows();
    const Eigen::Index m = ks.cols();
    Matrix tmp = Matrix::Zero(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < m; ++k)
            for (Eigen::Index l = 0; l < m; ++l) tmp(i, l) += ks(i, k) * pinv(k, l);
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index l = 0; l < m; ++l) out(i, j) += tmp(i, l) * ks(j, l);
    return 0.5 * (out + out.transpose());
}

HeterogeneityReport heterogeneity_check(const SampleMatrix& normals, const SampleMatrix& anomalous, const KernelSpec& spec,
                                        std::size_t m, std::size_t n_draws, std::uint64_t seed, double ridge) {
    if (m == 0 || n_draws == 0 || m > static_cast<std::size_t>(std::min(normals.rows(), anomalous.rows())))
        throw InputError("heterogeneity check: invalid m or draw count");
    std::vector<std::optional<double>> draws;
    for (std::size_t d = 0; d < n_draws; ++d) draws.push_back(detail::draw_log_det_ratio(normals, anomalous, spec, m, seed, d, ridge));
    return detail::aggregate(m, draws);
}

ExperimentReport benchmark(const BenchmarkConfig& config) {
    config.validate();
    ExperimentReport report;
    report.config = config;
    for (std::size_t p : config.p_values)
        for (std::size_t r = 0; r < config.n_repeats; ++r)
            for (auto& rec : run_cell(config, p, r)) report.records.push_back(rec);
    report.aggregates = aggregate_records(config, report.records);
    return report;
}

} // namespace apsvm::reference
