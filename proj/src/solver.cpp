#include "apsvm/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace apsvm {

const char* to_string(Mode mode) noexcept { return mode == Mode::Standard ? "standard" : "antiprofile"; }

Mode mode_from_string(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == "standard" || n == "svm") return Mode::Standard;
    if (n == "antiprofile" || n == "anti-profile" || n == "apsvm") return Mode::AntiProfile;
    throw InputError("unknown mode '" + name + "' (expected standard or antiprofile)");
}

void DualProblem::validate() const {
    const Eigen::Index n = labels.size();
    if (n == 0) throw InputError("dual problem has no training points");
    if (gram.rows() != n || gram.cols() != n)
        throw InputError("Gram matrix is " + std::to_string(gram.rows()) + "x" + std::to_string(gram.cols()) + " for " +
                         std::to_string(n) + " labels");
    if (!(cost > 0.0) || !std::isfinite(cost)) throw InputError("cost must be a positive finite number");
    if (!gram.allFinite()) throw NumericalError("Gram matrix has non-finite entries");
    bool pos = false;
    bool neg = false;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (labels[i] == 1.0)
            pos = true;
        else if (labels[i] == -1.0)
            neg = true;
        else
            throw InputError("label " + std::to_string(i) + " is not -1 or +1");
    }
    if (!pos || !neg) throw InputError("training labels contain a single class");
}

namespace {

struct Bounds {
    double cost;
    bool in_up(double y, double a) const { return (y > 0 && a < cost) || (y < 0 && a > 0); }
    bool in_low(double y, double a) const { return (y > 0 && a > 0) || (y < 0 && a < cost); }
};

// r_i = -y_i G_i = y_i - g_i, with G the gradient of 1/2 a^T Q a - e^T a.
double compute_bias(const Vector& labels, const Vector& alpha, const Vector& gradient, double cost) {
    double free_sum = 0.0;
    Eigen::Index free_count = 0;
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
        const double y = labels[i];
        const double r = -y * gradient[i];
        const double a = alpha[i];
        if (a > 0.0 && a < cost) {
            free_sum += r;
            ++free_count;
        } else if ((a <= 0.0 && y > 0) || (a >= cost && y < 0)) {
            lower = std::max(lower, r);
        } else {
            upper = std::min(upper, r);
        }
    }
    if (free_count > 0) return free_sum / static_cast<double>(free_count);
    if (std::isinf(lower)) return upper;
    if (std::isinf(upper)) return lower;
    return 0.5 * (lower + upper);
}

} // namespace

DualSolution solve_dual(const DualProblem& problem, const SolverOptions& options) {
    problem.validate();
    if (!(options.tolerance > 0.0)) throw InputError("solver tolerance must be positive");

    const Eigen::Index n = problem.size();
    const Matrix& K = problem.gram;
    const Vector& y = problem.labels;
    const double C = problem.cost;
    const Bounds bounds{C};
    constexpr double kTau = 1e-12;

    DualSolution sol;
    sol.alpha = Vector::Zero(n);
    Vector& alpha = sol.alpha;
    Vector gradient = Vector::Constant(n, -1.0);
    double objective = 0.0;
    if (options.record_objective) sol.objective_trace.push_back(objective);

    for (;;) {
        Eigen::Index i = -1;
        Eigen::Index j = -1;
        double up_max = -std::numeric_limits<double>::infinity();
        double low_min = std::numeric_limits<double>::infinity();
        for (Eigen::Index t = 0; t < n; ++t) {
            const double r = -y[t] * gradient[t];
            if (bounds.in_up(y[t], alpha[t]) && r > up_max) {
                up_max = r;
                i = t;
            }
            if (bounds.in_low(y[t], alpha[t]) && r < low_min) {
                low_min = r;
                j = t;
            }
        }
        sol.gap = (i < 0 || j < 0) ? 0.0 : up_max - low_min;
        if (sol.gap <= options.tolerance) break;
        if (sol.iterations >= options.max_iterations) {
            sol.bias = compute_bias(y, alpha, gradient, C);
            const double gap = sol.gap;
            throw ConvergenceError("SMO did not converge within " + std::to_string(options.max_iterations) +
                                       " pair updates (gap " + std::to_string(gap) + ")",
                                   std::move(sol), gap);
        }

        // Move along d = y_i e_i - y_j e_j, which keeps y^T alpha fixed.
        const double curvature = K(i, i) + K(j, j) - 2.0 * K(i, j);
        const double step_free = sol.gap / std::max(curvature, kTau);
        const double room_i = y[i] > 0 ? C - alpha[i] : alpha[i];
        const double room_j = y[j] > 0 ? alpha[j] : C - alpha[j];
        double step = std::min({step_free, room_i, room_j});

        if (step == room_i)
            alpha[i] = y[i] > 0 ? C : 0.0;
        else
            alpha[i] = std::clamp(alpha[i] + y[i] * step, 0.0, C);
        if (step == room_j)
            alpha[j] = y[j] > 0 ? 0.0 : C;
        else
            alpha[j] = std::clamp(alpha[j] - y[j] * step, 0.0, C);

        for (Eigen::Index k = 0; k < n; ++k) gradient[k] += y[k] * step * (K(k, i) - K(k, j));
        ++sol.iterations;
        if (options.record_objective) {
            objective += step * sol.gap - 0.5 * step * step * curvature;
            sol.objective_trace.push_back(objective);
        }
    }
    sol.bias = compute_bias(y, alpha, gradient, C);
    return sol;
}

double dual_objective(const DualProblem& problem, const Vector& alpha) {
    const Vector ya = problem.labels.cwiseProduct(alpha);
    return alpha.sum() - 0.5 * ya.dot(problem.gram * ya);
}

Vector training_decisions(const DualProblem& problem, const Vector& alpha, double bias) {
    const Vector ya = problem.labels.cwiseProduct(alpha);
    return (problem.gram * ya).array() + bias;
}

double kkt_residual(const DualProblem& problem, const Vector& alpha, double bias) {
    const Vector f = training_decisions(problem, alpha, bias);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < alpha.size(); ++i) {
        const double margin = problem.labels[i] * f[i] - 1.0;
        double violation = 0.0;
        if (alpha[i] <= 0.0)
            violation = std::max(0.0, -margin);
        else if (alpha[i] >= problem.cost)
            violation = std::max(0.0, margin);
        else
            violation = std::abs(margin);
        worst = std::max(worst, violation);
    }
    return worst;
}

TrainedModel::TrainedModel(Mode mode, KernelSpec spec, double cost, SampleMatrix training_samples, Vector labels, Vector alpha,
                           double bias, std::optional<IndirectKernelContext> context,
                           std::optional<Vector> normal_coefficients)
    : mode_(mode), spec_(spec), cost_(cost), samples_(std::move(training_samples)), labels_(std::move(labels)),
      alpha_(std::move(alpha)), bias_(bias), context_(std::move(context)) {
    if (samples_.rows() != labels_.size() || alpha_.size() != labels_.size())
        throw InputError("model: sample, label and alpha counts differ");
    if (mode_ == Mode::AntiProfile) {
        if (!context_) throw InputError("anti-profile model requires a normal-class context");
        if (context_->normals().cols() != samples_.cols()) throw InputError("model: normals and training samples differ in dimension");
        if (normal_coefficients) {
            if (normal_coefficients->size() != context_->size()) throw InputError("model: wrong number of normal coefficients");
            normal_coefficients_ = std::move(*normal_coefficients);
        } else {
            const Vector ya = labels_.cwiseProduct(alpha_);
            const Vector ks_t_ya = cross_gram(*context_, samples_).transpose() * ya;
            normal_coefficients_ = context_->pseudo_inverse() * ks_t_ya;
        }
    }
    const double threshold = sv_threshold();
    for (Eigen::Index i = 0; i < alpha_.size(); ++i)
        if (alpha_[i] > threshold) support_.push_back(i);
}

double TrainedModel::decision_value(FeatureView x) const {
    if (mode_ == Mode::AntiProfile) return bias_ + normal_coefficients_.dot(context_->normal_kernel_column(x));
    const Vector k = kernel_column(spec_, samples_, x);
    double acc = bias_;
    for (Eigen::Index j : support_) acc += alpha_[j] * labels_[j] * k[j];
    return acc;
}

double TrainedModel::decision_value_dual(FeatureView x) const {
    if (mode_ == Mode::Standard) return decision_value(x);
    const Vector px = context_->whitening().transpose() * context_->normal_kernel_column(x);
    const Matrix projected = cross_gram(*context_, samples_) * context_->whitening();
    const Vector kt = projected * px;
    return bias_ + labels_.cwiseProduct(alpha_).dot(kt);
}

Prediction TrainedModel::predict(FeatureView x) const {
    const double f = decision_value(x);
    return {f >= 0.0 ? 1 : -1, f};
}

Prediction predict(const TrainedModel& model, FeatureView x) { return model.predict(x); }

double support_vector_fraction(const TrainedModel& model) {
    return static_cast<double>(model.support_indices().size()) / static_cast<double>(model.labels().size());
}

TrainedModel train(const SampleMatrix& anomalous, const Vector& labels, const SampleMatrix* normals, const KernelSpec& spec,
                   Mode mode, double cost, const TrainOptions& options) {
    validate_samples(anomalous, "anomalous training samples");
    std::optional<IndirectKernelContext> context;
    DualProblem problem;
    problem.labels = labels;
    problem.cost = cost;
    if (mode == Mode::AntiProfile) {
        if (normals == nullptr || normals->rows() == 0) throw InputError("anti-profile training needs at least one normal sample");
        if (normals->cols() != anomalous.cols()) throw InputError("normal and anomalous samples differ in dimension");
        context = build_context(*normals, spec, options.ridge, options.eig_tolerance);
        problem.gram = indirect_gram(*context, anomalous);
    } else {
        problem.gram = gram_matrix(spec, anomalous);
    }
    DualSolution sol = solve_dual(problem, options.solver);
    return TrainedModel(mode, spec, cost, anomalous, labels, std::move(sol.alpha), sol.bias, std::move(context));
}

Matrix training_gram(const TrainedModel& model) {
    if (model.mode() == Mode::AntiProfile) return indirect_gram(*model.context(), model.training_samples());
    return gram_matrix(model.spec(), model.training_samples());
}

double primal_objective(const TrainedModel& model) {
    const Eigen::Index n = model.labels().size();
    double slack = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double f = model.decision_value(row_view(model.training_samples(), i));
        slack += std::max(0.0, 1.0 - model.labels()[i] * f);
    }
    double norm2 = 0.0;
    if (model.mode() == Mode::AntiProfile) {
        const Vector& c = model.normal_coefficients();
        // The pseudo-inverse belongs to K_n + ridge I, so the RKHS norm does too.
        const auto& ctx = *model.context();
        norm2 = c.dot(ctx.gram() * c) + ctx.ridge() * c.squaredNorm();
    } else {
        const Vector ya = model.labels().cwiseProduct(model.alpha());
        norm2 = ya.dot(gram_matrix(model.spec(), model.training_samples()) * ya);
    }
    const double n_lambda = static_cast<double>(n) * model.lambda();
    return slack + 0.5 * n_lambda * norm2;
}

double scaled_dual_objective(const TrainedModel& model) {
    DualProblem problem{training_gram(model), model.labels(), model.cost()};
    return dual_objective(problem, model.alpha()) / model.cost();
}

} // namespace apsvm
