#include "apsvm/rkhs.hpp"

#include "apsvm/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace apsvm {

Vector IndirectKernelContext::normal_kernel_column(FeatureView x) const { return kernel_column(spec_, normals_, x); }

IndirectKernelContext build_context(SampleMatrix normals, const KernelSpec& spec, double ridge, double eig_tolerance) {
    validate_samples(normals, "normal samples");
    if (!(ridge >= 0.0) || !std::isfinite(ridge)) throw InputError("ridge must be a finite non-negative number");
    if (!(eig_tolerance >= 0.0) || !std::isfinite(eig_tolerance))
        throw InputError("eigenvalue tolerance must be a finite non-negative number");

    IndirectKernelContext ctx(std::move(normals), spec);
    ctx.ridge_ = ridge;
    ctx.eig_tolerance_ = eig_tolerance;
    ctx.gram_ = gram_matrix(spec, ctx.normals_);

    Matrix regularized = ctx.gram_;
    regularized.diagonal().array() += ridge;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(regularized);
    if (eig.info() != Eigen::Success || !eig.eigenvalues().allFinite() || !eig.eigenvectors().allFinite())
        throw NumericalError("eigendecomposition of the normal-class Gram matrix failed");

    // Eigenvalues come back ascending. The cutoff is applied to the eigenvalues of
    // K_n itself (lambda + ridge - ridge): numerically null modes are dropped
    // rather than lifted to ridge and inverted as 1 / ridge.
    const Vector& values = eig.eigenvalues();
    const Eigen::Index m = values.size();
    const double largest = values[m - 1] - ridge;
    const double cutoff = eig_tolerance * largest;
    Eigen::Index first_kept = m;
    if (largest > 0.0) {
        first_kept = 0;
        while (first_kept < m && !(values[first_kept] - ridge > cutoff && values[first_kept] > 0.0)) ++first_kept;
    }
    const Eigen::Index kept = m - first_kept;
    ctx.whitening_ = eig.eigenvectors().rightCols(kept);
    for (Eigen::Index k = 0; k < kept; ++k) ctx.whitening_.col(k) /= std::sqrt(values[first_kept + k]);

    Matrix pinv = ctx.whitening_ * ctx.whitening_.transpose();
    ctx.pinv_ = 0.5 * (pinv + pinv.transpose());
    return ctx;
}

ProjectionCoefficients projection_coefficients(const IndirectKernelContext& ctx, FeatureView x) {
    return {ctx.pseudo_inverse() * ctx.normal_kernel_column(x)};
}

double indirect_kernel_eval(const IndirectKernelContext& ctx, FeatureView x, FeatureView y) {
    const Vector kx = ctx.normal_kernel_column(x);
    const Vector ky = ctx.normal_kernel_column(y);
    const Vector px = ctx.whitening().transpose() * kx;
    const Vector py = ctx.whitening().transpose() * ky;
    return px.dot(py);
}

Matrix cross_gram(const IndirectKernelContext& ctx, const SampleMatrix& a) {
    if (a.cols() != ctx.normals().cols())
        throw InputError("samples have dimension " + std::to_string(a.cols()) + ", normals have " + std::to_string(ctx.normals().cols()));
    return gram_matrix(ctx.spec(), a, ctx.normals());
}

Matrix indirect_gram(const IndirectKernelContext& ctx, const SampleMatrix& a) {
    const Matrix projected = cross_gram(ctx, a) * ctx.whitening();
    Matrix out = projected * projected.transpose();
    return 0.5 * (out + out.transpose());
}

} // namespace apsvm
