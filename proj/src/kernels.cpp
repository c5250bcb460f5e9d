#include "apsvm/kernels.hpp"

#include "apsvm/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace apsvm {

namespace {

double squared_distance(FeatureView x, FeatureView y) noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        acc += d * d;
    }
    return acc;
}

double dot(FeatureView x, FeatureView y) noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
    return acc;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

KernelSpec KernelSpec::rbf(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw InputError("RBF gamma must be a positive finite number, got " + std::to_string(gamma));
    return KernelSpec(KernelFamily::Rbf, gamma);
}

double KernelSpec::evaluate_unchecked(FeatureView x, FeatureView y) const noexcept {
    if (family_ == KernelFamily::Linear) return dot(x, y);
    return std::exp(-gamma_ * squared_distance(x, y));
}

std::string KernelSpec::describe() const {
    std::ostringstream out;
    out << to_string(family_);
    if (family_ == KernelFamily::Rbf) out << "(gamma=" << gamma_ << ")";
    return out.str();
}

const char* to_string(KernelFamily family) noexcept {
    return family == KernelFamily::Linear ? "linear" : "rbf";
}

KernelFamily kernel_family_from_string(const std::string& name) {
    const std::string n = lower(name);
    if (n == "linear") return KernelFamily::Linear;
    if (n == "rbf") return KernelFamily::Rbf;
    throw InputError("unknown kernel '" + name + "' (expected linear or rbf)");
}

double kernel_eval(const KernelSpec& spec, FeatureView x, FeatureView y) {
    if (x.size() != y.size())
        throw InputError("kernel_eval: dimension mismatch (" + std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
    if (x.empty()) throw InputError("kernel_eval: empty feature vector");
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(x.begin(), x.end(), finite) || !std::all_of(y.begin(), y.end(), finite))
        throw InputError("kernel_eval: non-finite input");
    return spec.evaluate_unchecked(x, y);
}

void validate_samples(const SampleMatrix& samples, const char* what) {
    if (samples.rows() == 0 || samples.cols() == 0) throw InputError(std::string(what) + ": empty sample set");
    if (!samples.allFinite()) throw InputError(std::string(what) + ": non-finite entry");
}

Matrix gram_matrix(const KernelSpec& spec, const SampleMatrix& a, const SampleMatrix& b) {
    validate_samples(a, "gram_matrix rows");
    validate_samples(b, "gram_matrix columns");
    if (a.cols() != b.cols()) throw InputError("gram_matrix: sample sets differ in dimension");
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = b.rows();
    Matrix out(rows, cols);
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < rows; ++i) {
        const FeatureView xi = row_view(a, i);
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = spec.evaluate_unchecked(xi, row_view(b, j));
    }
    return out;
}

Matrix gram_matrix(const KernelSpec& spec, const SampleMatrix& a) {
    validate_samples(a, "gram_matrix");
    const Eigen::Index n = a.rows();
    Matrix out(n, n);
#pragma omp parallel for schedule(dynamic, 8)
    for (Eigen::Index i = 0; i < n; ++i) {
        const FeatureView xi = row_view(a, i);
        for (Eigen::Index j = i; j < n; ++j) out(i, j) = spec.evaluate_unchecked(xi, row_view(a, j));
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < i; ++j) out(i, j) = out(j, i);
    return out;
}

Vector kernel_column(const KernelSpec& spec, const SampleMatrix& samples, FeatureView x) {
    if (static_cast<Eigen::Index>(x.size()) != samples.cols())
        throw InputError("feature vector has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(samples.cols()));
    if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); }))
        throw InputError("feature vector has a non-finite entry");
    Vector out(samples.rows());
    for (Eigen::Index i = 0; i < samples.rows(); ++i) out[i] = spec.evaluate_unchecked(row_view(samples, i), x);
    return out;
}

double rbf_gamma_heuristic(const SampleMatrix& normals, const SampleMatrix& anomalous, std::size_t n_each, Rng& rng,
                           DistanceMode mode) {
    if (n_each == 0) throw InputError("rbf_gamma_heuristic: n_each must be at least 1");
    if (normals.cols() != anomalous.cols()) throw InputError("rbf_gamma_heuristic: sample sets differ in dimension");
    if (static_cast<std::size_t>(normals.rows()) < n_each || static_cast<std::size_t>(anomalous.rows()) < n_each)
        throw InputError("rbf_gamma_heuristic: need at least " + std::to_string(n_each) + " samples in each set");
    const auto zi = rng.sample_without_replacement(static_cast<std::size_t>(normals.rows()), n_each);
    const auto xi = rng.sample_without_replacement(static_cast<std::size_t>(anomalous.rows()), n_each);
    double total = 0.0;
    for (std::size_t a : zi) {
        for (std::size_t b : xi) {
            const double d2 = squared_distance(row_view(normals, static_cast<Eigen::Index>(a)),
                                               row_view(anomalous, static_cast<Eigen::Index>(b)));
            total += mode == DistanceMode::Euclidean ? std::sqrt(d2) : d2;
        }
    }
    const double mean = total / static_cast<double>(n_each * n_each);
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw DegenerateDataError("rbf_gamma_heuristic: selected normal and anomalous samples coincide (mean distance 0)");
    return 1.0 / mean;
}

} // namespace apsvm
