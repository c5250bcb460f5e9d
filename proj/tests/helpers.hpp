#pragma once

#include "apsvm/random.hpp"
#include "apsvm/types.hpp"

#include <Eigen/Dense>

#include <initializer_list>

namespace testing_helpers {

inline apsvm::SampleMatrix rows(std::initializer_list<std::initializer_list<double>> values) {
    const auto n = static_cast<Eigen::Index>(values.size());
    const auto p = static_cast<Eigen::Index>(values.begin()->size());
    apsvm::SampleMatrix out(n, p);
    Eigen::Index i = 0;
    for (const auto& r : values) {
        Eigen::Index j = 0;
        for (double v : r) out(i, j++) = v;
        ++i;
    }
    return out;
}

inline apsvm::SampleMatrix gaussian(apsvm::Rng& rng, Eigen::Index n, Eigen::Index p, double sigma = 1.0) {
    apsvm::SampleMatrix out(n, p);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < p; ++j) out(i, j) = sigma * rng.normal();
    return out;
}

inline double min_eigenvalue(const apsvm::Matrix& k) {
    Eigen::SelfAdjointEigenSolver<apsvm::Matrix> es(k, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

/// +-1 labels with both classes present.
inline apsvm::Vector alternating_labels(Eigen::Index n) {
    apsvm::Vector y(n);
    for (Eigen::Index i = 0; i < n; ++i) y[i] = (i % 2 == 0) ? -1.0 : 1.0;
    return y;
}

} // namespace testing_helpers
