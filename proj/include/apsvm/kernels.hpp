#pragma once

#include "apsvm/random.hpp"
#include "apsvm/types.hpp"

#include <string>

namespace apsvm {

enum class KernelFamily { Linear, Rbf };

/// Kernel family plus its hyperparameter. Linear: <x, y>. RBF: exp(-gamma * |x - y|^2).
class KernelSpec {
public:
    static KernelSpec linear() { return KernelSpec(KernelFamily::Linear, 0.0); }
    static KernelSpec rbf(double gamma);

    KernelFamily family() const noexcept { return family_; }
    /// Zero for the linear kernel.
    double gamma() const noexcept { return gamma_; }

    /// No dimension or finiteness checks; callers validate sample sets up front.
    double evaluate_unchecked(FeatureView x, FeatureView y) const noexcept;

    std::string describe() const;

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

private:
    KernelSpec(KernelFamily family, double gamma) : family_(family), gamma_(gamma) {}

    KernelFamily family_;
    double gamma_;
};

const char* to_string(KernelFamily family) noexcept;
KernelFamily kernel_family_from_string(const std::string& name);

double kernel_eval(const KernelSpec& spec, FeatureView x, FeatureView y);

/// Throws InputError on an empty set or any non-finite entry.
void validate_samples(const SampleMatrix& samples, const char* what);

/// Entry (i, j) = k(a_i, b_j); |a| x |b|. Rows are filled in parallel, each
/// entry independently, so the result does not depend on the thread count.
Matrix gram_matrix(const KernelSpec& spec, const SampleMatrix& a, const SampleMatrix& b);

/// Square Gram of one set: upper triangle computed, lower mirrored, so it is exactly symmetric.
Matrix gram_matrix(const KernelSpec& spec, const SampleMatrix& a);

/// Kernel values of x against every row of `samples`.
Vector kernel_column(const KernelSpec& spec, const SampleMatrix& samples, FeatureView x);

enum class DistanceMode { Euclidean, SquaredEuclidean };

/// RBF bandwidth from the data: draw n_each normals and n_each anomalous samples
/// without replacement, average the distance over all n_each^2 cross pairs and
/// return the reciprocal.
///
/// The default averages squared distances, which puts gamma * |x - y|^2 on the
/// order of one. With plain Euclidean distances gamma * |x - y|^2 grows like
/// sqrt(p) and RBF values underflow once p reaches a few dozen.
double rbf_gamma_heuristic(const SampleMatrix& normals, const SampleMatrix& anomalous, std::size_t n_each, Rng& rng,
                           DistanceMode mode = DistanceMode::SquaredEuclidean);

} // namespace apsvm
