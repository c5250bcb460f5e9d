#pragma once

#include "apsvm/error.hpp"
#include "apsvm/kernels.hpp"
#include "apsvm/rkhs.hpp"
#include "apsvm/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace apsvm {

/// C-SVM dual over a precomputed Gram matrix:
///   max  e^T a - 1/2 a^T Y G Y a   s.t.  0 <= a <= C,  y^T a = 0.
/// The anti-profile problem is this same dual with G = K~; its lambda form
/// corresponds to C = 1 / (n lambda).
struct DualProblem {
    Matrix gram;
    Vector labels; ///< entries are exactly -1 or +1
    double cost = 1.0;

    /// Throws InputError unless labels are +-1, both classes appear, and sizes match.
    void validate() const;
    Eigen::Index size() const noexcept { return labels.size(); }
};

struct SolverOptions {
    double tolerance = 1e-6;
    std::uint64_t max_iterations = 10'000'000;
    /// Record the dual objective after every accepted pair update.
    bool record_objective = false;
};

struct DualSolution {
    Vector alpha;
    double bias = 0.0;
    std::uint64_t iterations = 0;
    /// Maximal violating-pair gap at exit.
    double gap = 0.0;
    std::vector<double> objective_trace;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, DualSolution best, double residual)
        : Error(ErrorKind::Convergence, what), best_(std::move(best)), residual_(residual) {}
    const DualSolution& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }

private:
    DualSolution best_;
    double residual_;
};

/// SMO with maximal-violating-pair selection. Stops when the pair gap is <= tolerance;
/// the bias then averages y_j - g(x_j) over free support vectors, or takes the
/// midpoint of the feasible bias interval when there are none.
DualSolution solve_dual(const DualProblem& problem, const SolverOptions& options = {});

double dual_objective(const DualProblem& problem, const Vector& alpha);

/// Max over points of the KKT violation measured on y_i f(x_i).
double kkt_residual(const DualProblem& problem, const Vector& alpha, double bias);

/// Decision values f(x_i) = bias + sum_j alpha_j y_j G_ij on the training points.
Vector training_decisions(const DualProblem& problem, const Vector& alpha, double bias);

struct Prediction {
    int label; ///< +1 or -1; a zero decision value maps to +1
    double decision_value;
};

/// A solved model with everything needed to predict.
///
/// Standard: f(x) = d + sum_j alpha_j y_j k(x_j, x) over the anomalous training points.
/// AntiProfile: f(x) = d + sum_i c_i k(z_i, x) over the normal samples, with
/// c = K_n^+ K_s^T (alpha o y); equivalently d + sum_j alpha_j y_j k~(x_j, x).
class TrainedModel {
public:
    TrainedModel(Mode mode, KernelSpec spec, double cost, SampleMatrix training_samples, Vector labels, Vector alpha,
                 double bias, std::optional<IndirectKernelContext> context,
                 std::optional<Vector> normal_coefficients = std::nullopt);

    Mode mode() const noexcept { return mode_; }
    const KernelSpec& spec() const noexcept { return spec_; }
    double cost() const noexcept { return cost_; }
    /// lambda = 1 / (n C).
    double lambda() const noexcept { return 1.0 / (static_cast<double>(labels_.size()) * cost_); }
    const SampleMatrix& training_samples() const noexcept { return samples_; }
    const Vector& labels() const noexcept { return labels_; }
    const Vector& alpha() const noexcept { return alpha_; }
    double bias() const noexcept { return bias_; }
    const std::vector<Eigen::Index>& support_indices() const noexcept { return support_; }
    const std::optional<IndirectKernelContext>& context() const noexcept { return context_; }
    /// Empty in Standard mode.
    const Vector& normal_coefficients() const noexcept { return normal_coefficients_; }
    Eigen::Index dimension() const noexcept { return samples_.cols(); }
    double sv_threshold() const noexcept { return 1e-8 * cost_; }

    /// Primary route: expansion over training points (Standard) or normal samples (AntiProfile).
    double decision_value(FeatureView x) const;
    /// Dual route: d + sum_j alpha_j y_j kappa(x_j, x), kappa = k or k~.
    double decision_value_dual(FeatureView x) const;
    Prediction predict(FeatureView x) const;

private:
    Mode mode_;
    KernelSpec spec_;
    double cost_;
    SampleMatrix samples_;
    Vector labels_;
    Vector alpha_;
    double bias_;
    std::vector<Eigen::Index> support_;
    std::optional<IndirectKernelContext> context_;
    Vector normal_coefficients_;
};

Prediction predict(const TrainedModel& model, FeatureView x);

/// |{i : alpha_i > 1e-8 C}| / n.
double support_vector_fraction(const TrainedModel& model);

struct TrainOptions {
    double ridge = kDefaultRidge;
    double eig_tolerance = kDefaultEigTolerance;
    SolverOptions solver;
};

/// Train from explicit sample sets. `normals` is required for AntiProfile and ignored otherwise.
TrainedModel train(const SampleMatrix& anomalous, const Vector& labels, const SampleMatrix* normals, const KernelSpec& spec,
                   Mode mode, double cost, const TrainOptions& options = {});

/// Training Gram in the model's mode (K or K~).
Matrix training_gram(const TrainedModel& model);

/// Regularized-risk primal objective sum(xi) + (n lambda / 2) c^T K_n c for an AntiProfile model,
/// or sum(xi) + (n lambda / 2) ||h||^2 for a Standard one.
double primal_objective(const TrainedModel& model);

/// Dual objective in the same scaling as primal_objective: (e^T a - 1/2 a^T Q a) / C.
double scaled_dual_objective(const TrainedModel& model);

} // namespace apsvm
