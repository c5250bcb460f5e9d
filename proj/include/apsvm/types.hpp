#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string>

namespace apsvm {

/// Samples are stored one per row so that each sample is a contiguous span.
using SampleMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

using FeatureView = std::span<const double>;

inline FeatureView row_view(const SampleMatrix& samples, Eigen::Index i) {
    return {samples.data() + i * samples.cols(), static_cast<std::size_t>(samples.cols())};
}

inline FeatureView as_view(const Vector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

/// Standard SVM over the anomalous Gram, or the anti-profile SVM over the indirect kernel.
enum class Mode { Standard, AntiProfile };

const char* to_string(Mode mode) noexcept;
Mode mode_from_string(const std::string& name);

} // namespace apsvm
