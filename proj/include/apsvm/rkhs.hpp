#pragma once

#include "apsvm/kernels.hpp"
#include "apsvm/types.hpp"

namespace apsvm {

inline constexpr double kDefaultRidge = 1e-10;
inline constexpr double kDefaultEigTolerance = 1e-12;

/// Normal-class Gram matrix K_n and its spectral pseudo-inverse.
///
/// The pseudo-inverse is taken of K_n + ridge * I on the eigenmodes of K_n whose
/// eigenvalue exceeds eig_tolerance * lambda_max; the rest are dropped. It is kept
/// in factored form P = W W^T with W = V diag(lambda^-1/2), so indirect Gram
/// matrices are built as Gram matrices of projected features and stay PSD.
///
/// Immutable once built; safe to share across threads.
class IndirectKernelContext {
public:
    const SampleMatrix& normals() const noexcept { return normals_; }
    const KernelSpec& spec() const noexcept { return spec_; }
    /// K_n without the ridge.
    const Matrix& gram() const noexcept { return gram_; }
    const Matrix& pseudo_inverse() const noexcept { return pinv_; }
    /// m x rank factor W with pseudo_inverse() = W W^T (up to symmetrization).
    const Matrix& whitening() const noexcept { return whitening_; }
    double ridge() const noexcept { return ridge_; }
    double eig_tolerance() const noexcept { return eig_tolerance_; }
    Eigen::Index rank() const noexcept { return whitening_.cols(); }
    Eigen::Index size() const noexcept { return normals_.rows(); }

    /// k_zx: kernel values between every normal sample and x.
    Vector normal_kernel_column(FeatureView x) const;

private:
    friend IndirectKernelContext build_context(SampleMatrix, const KernelSpec&, double, double);

    IndirectKernelContext(SampleMatrix normals, const KernelSpec& spec) : normals_(std::move(normals)), spec_(spec) {}

    SampleMatrix normals_;
    KernelSpec spec_;
    Matrix gram_;
    Matrix pinv_;
    Matrix whitening_;
    double ridge_ = kDefaultRidge;
    double eig_tolerance_ = kDefaultEigTolerance;
};

IndirectKernelContext build_context(SampleMatrix normals, const KernelSpec& spec, double ridge = kDefaultRidge,
                                    double eig_tolerance = kDefaultEigTolerance);

/// Coefficients of the projection of k(x, .) onto span{k(z_i, .)}: beta = K_n^+ k_zx.
struct ProjectionCoefficients {
    Vector beta;
};

ProjectionCoefficients projection_coefficients(const IndirectKernelContext& ctx, FeatureView x);

/// k~(x, y) = k_zx^T K_n^+ k_zy, the RKHS inner product of the projected representers.
double indirect_kernel_eval(const IndirectKernelContext& ctx, FeatureView x, FeatureView y);

/// K_s = gram_matrix(spec, a, normals), n x m.
Matrix cross_gram(const IndirectKernelContext& ctx, const SampleMatrix& a);

/// K~ = K_s K_n^+ K_s^T, explicitly symmetrized.
Matrix indirect_gram(const IndirectKernelContext& ctx, const SampleMatrix& a);

} // namespace apsvm
