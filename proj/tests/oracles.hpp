#pragma once

// Test-only oracles. None of these call into the solver, the RKHS module or the
// eigen-based diagnostics they are used to check.

#include "apsvm/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using apsvm::Matrix;
using apsvm::Vector;

inline double dual_value(const Matrix& K, const Vector& y, const Vector& a) {
    const Vector ya = y.cwiseProduct(a);
    return a.sum() - 0.5 * ya.dot(K * ya);
}

/// Exhaustive face enumeration for max e^T a - 1/2 a^T Y K Y a, 0 <= a <= C, y^T a = 0.
/// Every coordinate is assigned to {0, C, free}; on each face the stationarity
/// system with the equality multiplier is solved exactly. A 1e-9 relative ridge
/// makes every face problem strictly concave; it moves the optimum by at most
/// 1/2 * ridge * n * C^2. Returns the best objective of the ORIGINAL problem over
/// the feasible candidates.
inline double enumerate_dual_max(const Matrix& K, const Vector& y, double C, Vector* argmax = nullptr) {
    const int n = static_cast<int>(y.size());
    const Matrix Q = y.asDiagonal() * K * y.asDiagonal();
    const double eps = 1e-9 * std::max(1.0, Q.cwiseAbs().maxCoeff());
    double best = -std::numeric_limits<double>::infinity();
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    std::vector<int> state(static_cast<std::size_t>(n));
    for (int code = 0; code < total; ++code) {
        int c = code;
        std::vector<int> free_idx;
        Vector a = Vector::Zero(n);
        for (int i = 0; i < n; ++i) {
            state[static_cast<std::size_t>(i)] = c % 3;
            c /= 3;
            if (state[static_cast<std::size_t>(i)] == 1) a[i] = C;
            if (state[static_cast<std::size_t>(i)] == 2) free_idx.push_back(i);
        }
        const int f = static_cast<int>(free_idx.size());
        if (f == 0) {
            if (std::abs(y.dot(a)) > 1e-12 * C * n) continue;
        } else {
            Matrix M = Matrix::Zero(f + 1, f + 1);
            Vector rhs(f + 1);
            for (int r = 0; r < f; ++r) {
                const int i = free_idx[static_cast<std::size_t>(r)];
                for (int s = 0; s < f; ++s) M(r, s) = Q(i, free_idx[static_cast<std::size_t>(s)]);
                M(r, r) += eps;
                M(r, f) = y[i];
                M(f, r) = y[i];
                double fixed = 0.0;
                for (int j = 0; j < n; ++j)
                    if (state[static_cast<std::size_t>(j)] != 2) fixed += Q(i, j) * a[j];
                rhs[r] = 1.0 - fixed;
            }
            double fixed_eq = 0.0;
            for (int j = 0; j < n; ++j)
                if (state[static_cast<std::size_t>(j)] != 2) fixed_eq += y[j] * a[j];
            rhs[f] = -fixed_eq;
            const Vector sol = M.fullPivLu().solve(rhs);
            if (!sol.allFinite() || (M * sol - rhs).norm() > 1e-8 * (1.0 + rhs.norm())) continue;
            bool feasible = true;
            for (int r = 0; r < f; ++r) {
                const double v = sol[r];
                if (v < -1e-7 * C || v > C * (1.0 + 1e-7)) feasible = false;
                a[free_idx[static_cast<std::size_t>(r)]] = std::clamp(v, 0.0, C);
            }
            if (!feasible) continue;
        }
        const double value = dual_value(K, y, a);
        if (value > best) {
            best = value;
            if (argmax) *argmax = a;
        }
    }
    return best;
}

/// Zooming dense grid over the feasible set of a 4-point dual (3 free coordinates,
/// the 4th fixed by y^T a = 0). 41^3 points per round, window shrinks around the best.
inline double grid_dual_max_4(const Matrix& K, const Vector& y, double C) {
    Vector center = Vector::Constant(3, C / 2);
    double half = C / 2;
    double best = -std::numeric_limits<double>::infinity();
    Vector best_a = Vector::Zero(4);
    constexpr int steps = 40;
    for (int round = 0; round < 12; ++round) {
        const double h = 2 * half / steps;
        for (int i = 0; i <= steps; ++i)
            for (int j = 0; j <= steps; ++j)
                for (int k = 0; k <= steps; ++k) {
                    Vector a(4);
                    a[0] = std::clamp(center[0] - half + i * h, 0.0, C);
                    a[1] = std::clamp(center[1] - half + j * h, 0.0, C);
                    a[2] = std::clamp(center[2] - half + k * h, 0.0, C);
                    a[3] = -y[3] * (y[0] * a[0] + y[1] * a[1] + y[2] * a[2]);
                    if (a[3] < 0.0 || a[3] > C) continue;
                    const double v = dual_value(K, y, a);
                    if (v > best) {
                        best = v;
                        best_a = a;
                    }
                }
        center = best_a.head(3);
        half = 2 * h;
    }
    return best;
}

/// Zooming grid minimizer of 1/2 ||k(x,.) - sum_i b_i k(z_i,.)||^2 = 1/2 (kxx - 2 b^T kzx + b^T Kn b)
/// over a 3-coefficient box.
inline Vector grid_projection_3(const Matrix& Kn, const Vector& kzx, double kxx, double box) {
    const auto loss = [&](const Vector& b) { return 0.5 * (kxx - 2 * b.dot(kzx) + b.dot(Kn * b)); };
    Vector center = Vector::Zero(3);
    double half = box;
    Vector best_b = center;
    double best = loss(center);
    constexpr int steps = 40;
    for (int round = 0; round < 14; ++round) {
        const double h = 2 * half / steps;
        for (int i = 0; i <= steps; ++i)
            for (int j = 0; j <= steps; ++j)
                for (int k = 0; k <= steps; ++k) {
                    Vector b(3);
                    b << center[0] - half + i * h, center[1] - half + j * h, center[2] - half + k * h;
                    const double v = loss(b);
                    if (v < best) {
                        best = v;
                        best_b = b;
                    }
                }
        center = best_b;
        half = 2 * h;
    }
    return best_b;
}

/// Linear-kernel indirect Gram by explicit Gram-Schmidt projection onto span{z_j}
/// in feature space, then plain dot products of the projections.
inline Matrix feature_space_projection_gram(const apsvm::SampleMatrix& anomalous, const apsvm::SampleMatrix& normals) {
    std::vector<Vector> basis;
    for (Eigen::Index j = 0; j < normals.rows(); ++j) {
        Vector v = normals.row(j).transpose();
        for (const auto& q : basis) v -= q.dot(v) * q;
        for (const auto& q : basis) v -= q.dot(v) * q;
        if (v.norm() > 1e-10 * (1.0 + normals.row(j).norm())) basis.push_back(v / v.norm());
    }
    std::vector<Vector> proj;
    for (Eigen::Index i = 0; i < anomalous.rows(); ++i) {
        const Vector x = anomalous.row(i).transpose();
        Vector px = Vector::Zero(x.size());
        for (const auto& q : basis) px += q.dot(x) * q;
        proj.push_back(px);
    }
    Matrix out(anomalous.rows(), anomalous.rows());
    for (Eigen::Index i = 0; i < anomalous.rows(); ++i)
        for (Eigen::Index j = 0; j < anomalous.rows(); ++j) out(i, j) = proj[static_cast<std::size_t>(i)].dot(proj[static_cast<std::size_t>(j)]);
    return out;
}

/// Eigenvalues of a small symmetric matrix as roots of its characteristic polynomial:
/// Faddeev-LeVerrier coefficients, then sign-change scan plus bisection on [lo, hi].
/// Returned in descending order; the caller checks that all n roots were found.
inline std::vector<double> charpoly_eigenvalues(const Matrix& A, double lo, double hi, int scan = 200000) {
    const int n = static_cast<int>(A.rows());
    using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    const LMat Al = A.cast<long double>();
    std::vector<long double> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1;
    LMat M = LMat::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        M = Al * M + c[static_cast<std::size_t>(n - k + 1)] * LMat::Identity(n, n);
        c[static_cast<std::size_t>(n - k)] = -(Al * M).trace() / k;
    }
    const auto poly = [&](long double x) {
        long double acc = 0;
        for (int k = n; k >= 0; --k) acc = acc * x + c[static_cast<std::size_t>(k)];
        return acc;
    };
    std::vector<double> roots;
    long double prev_x = lo;
    long double prev = poly(prev_x);
    for (int s = 1; s <= scan; ++s) {
        const long double x = lo + (hi - lo) * static_cast<long double>(s) / scan;
        const long double v = poly(x);
        if (v == 0) {
            roots.push_back(static_cast<double>(x));
        } else if ((prev < 0) != (v < 0) && prev != 0) {
            long double a = prev_x;
            long double b = x;
            for (int it = 0; it < 200; ++it) {
                const long double mid = 0.5L * (a + b);
                if ((poly(mid) < 0) == (poly(a) < 0))
                    a = mid;
                else
                    b = mid;
            }
            roots.push_back(static_cast<double>(0.5L * (a + b)));
        }
        prev_x = x;
        prev = v;
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

} // namespace oracle
