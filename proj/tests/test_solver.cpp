#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "apsvm/experiments.hpp"
#include "apsvm/solver.hpp"

#include <array>
#include <cmath>

using namespace apsvm;
using testing_helpers::rows;

namespace {

DualProblem two_point_problem() {
    DualProblem p;
    p.gram = gram_matrix(KernelSpec::linear(), rows({{-1}, {1}}));
    p.labels = Vector(2);
    p.labels << -1, 1;
    p.cost = 10.0;
    return p;
}

void check_feasible(const DualProblem& problem, const Vector& alpha) {
    CHECK(alpha.minCoeff() >= 0.0);
    CHECK(alpha.maxCoeff() <= problem.cost);
    CHECK(std::abs(problem.labels.dot(alpha)) <= 1e-8);
}

} // namespace

TEST_CASE("two-point analytic problem") {
    const auto problem = two_point_problem();
    const auto sol = solve_dual(problem);
    CHECK(sol.alpha[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sol.alpha[1] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(sol.bias) <= 1e-9);
    check_feasible(problem, sol.alpha);

    Vector y(2);
    y << -1, 1;
    const auto model = train(rows({{-1}, {1}}), y, nullptr, KernelSpec::linear(), Mode::Standard, 10.0);
    const std::vector<double> half{0.5};
    const auto pred = predict(model, half);
    CHECK(pred.decision_value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(pred.label == 1);
    CHECK(support_vector_fraction(model) == 1.0);

    const std::vector<double> zero{0.0};
    TrainedModel flat(Mode::Standard, KernelSpec::linear(), 1.0, rows({{-1}, {1}}), y, Vector::Zero(2), 0.0, std::nullopt);
    CHECK(flat.predict(zero).label == 1);
}

TEST_CASE("tiny cost puts every point at the upper bound") {
    Rng rng(2);
    const auto x = testing_helpers::gaussian(rng, 8, 3);
    DualProblem problem{gram_matrix(KernelSpec::rbf(0.5), x), testing_helpers::alternating_labels(8), 1e-9};
    const auto sol = solve_dual(problem);
    for (Eigen::Index i = 0; i < 8; ++i) CHECK(sol.alpha[i] == problem.cost);
    const auto model = train(x, problem.labels, nullptr, KernelSpec::rbf(0.5), Mode::Standard, 1e-9);
    CHECK(support_vector_fraction(model) == 1.0);
}

TEST_CASE("n = 4 instance matches dense grid search") {
    Rng rng(44);
    for (int trial = 0; trial < 3; ++trial) {
        const auto x = testing_helpers::gaussian(rng, 4, 2);
        Vector y(4);
        y << 1, -1, 1, -1;
        DualProblem problem{gram_matrix(KernelSpec::rbf(1.0), x), y, 1.0};
        const auto sol = solve_dual(problem);
        const double grid = oracle::grid_dual_max_4(problem.gram, y, 1.0);
        CHECK(dual_objective(problem, sol.alpha) == doctest::Approx(grid).epsilon(1e-6).scale(1.0));
        CHECK(dual_objective(problem, sol.alpha) >= grid - 1e-9);
    }
}

TEST_CASE("solver matches exhaustive face enumeration and satisfies KKT") {
    Rng rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(5));
        const auto x = testing_helpers::gaussian(rng, n, 2);
        Vector y = testing_helpers::alternating_labels(n);
        for (Eigen::Index i = 2; i < n; ++i) y[i] = rng.below(2) ? 1.0 : -1.0;
        const double c = std::array<double, 3>{0.1, 1.0, 10.0}[rng.below(3)];
        const auto spec = trial % 2 ? KernelSpec::linear() : KernelSpec::rbf(0.8);
        DualProblem problem{gram_matrix(spec, x), y, c};
        const auto sol = solve_dual(problem);
        check_feasible(problem, sol.alpha);
        const double best = oracle::enumerate_dual_max(problem.gram, y, c);
        CHECK(dual_objective(problem, sol.alpha) == doctest::Approx(best).epsilon(1e-5).scale(1.0));
        CHECK(kkt_residual(problem, sol.alpha, sol.bias) <= 1e-6);
    }
}

TEST_CASE("objective trace is non-decreasing") {
    Rng rng(77);
    const auto x = testing_helpers::gaussian(rng, 30, 5);
    Vector y = testing_helpers::alternating_labels(30);
    DualProblem problem{gram_matrix(KernelSpec::rbf(0.2), x), y, 5.0};
    SolverOptions opts;
    opts.record_objective = true;
    const auto sol = solve_dual(problem, opts);
    REQUIRE(sol.objective_trace.size() == sol.iterations + 1);
    REQUIRE(!sol.objective_trace.empty());
    CHECK(sol.objective_trace.front() >= 0.0);
    for (std::size_t i = 1; i < sol.objective_trace.size(); ++i)
        CHECK(sol.objective_trace[i] >= sol.objective_trace[i - 1] - 1e-12);
    CHECK(sol.objective_trace.back() == doctest::Approx(dual_objective(problem, sol.alpha)).epsilon(1e-9));
}

TEST_CASE("solver errors") {
    auto problem = two_point_problem();
    problem.labels << 1, 1;
    CHECK_THROWS_AS(solve_dual(problem), InputError);
    problem.labels << 1, 0.5;
    CHECK_THROWS_AS(solve_dual(problem), InputError);

    Rng rng(5);
    const auto x = testing_helpers::gaussian(rng, 40, 3);
    DualProblem hard{gram_matrix(KernelSpec::rbf(1.0), x), testing_helpers::alternating_labels(40), 100.0};
    SolverOptions opts;
    opts.max_iterations = 2;
    try {
        solve_dual(hard, opts);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.kind() == ErrorKind::Convergence);
        CHECK(e.residual() > opts.tolerance);
        CHECK(e.best_iterate().alpha.size() == 40);
        CHECK(e.best_iterate().iterations == 2);
        check_feasible(hard, e.best_iterate().alpha);
    }
}

TEST_CASE("free support vectors sit on the margin") {
    Rng rng(6);
    const auto x = testing_helpers::gaussian(rng, 24, 3);
    Vector y(24);
    for (Eigen::Index i = 0; i < 24; ++i) y[i] = x(i, 0) + 0.3 * x(i, 1) > 0 ? 1.0 : -1.0;
    const auto model = train(x, y, nullptr, KernelSpec::rbf(0.5), Mode::Standard, 4.0);
    int free_count = 0;
    for (Eigen::Index i = 0; i < 24; ++i) {
        const double a = model.alpha()[i];
        if (a > 0.0 && a < model.cost()) {
            ++free_count;
            CHECK(std::abs(y[i] * model.decision_value(row_view(x, i)) - 1.0) <= 1e-6);
        }
    }
    CHECK(free_count > 0);
}

TEST_CASE("support vector fraction counts entries above threshold") {
    Vector y = testing_helpers::alternating_labels(6);
    Vector alpha = Vector::Zero(6);
    alpha[1] = 0.3;
    alpha[4] = 0.3;
    alpha[2] = 1e-10; // below 1e-8 * C
    TrainedModel model(Mode::Standard, KernelSpec::linear(), 1.0, SampleMatrix::Zero(6, 2), y, alpha, 0.0, std::nullopt);
    CHECK(support_vector_fraction(model) == doctest::Approx(2.0 / 6.0));
    CHECK(model.support_indices().size() == 2);
}

TEST_CASE("anti-profile equals standard when normals are the training points") {
    Rng rng(31);
    const auto x = testing_helpers::gaussian(rng, 12, 3);
    Vector y = testing_helpers::alternating_labels(12);
    TrainOptions opts;
    opts.ridge = 0.0;
    opts.solver.tolerance = 1e-10;
    const auto spec = KernelSpec::rbf(0.4);
    const auto standard = train(x, y, nullptr, spec, Mode::Standard, 2.0, opts);
    const auto anti = train(x, y, &x, spec, Mode::AntiProfile, 2.0, opts);
    CHECK((standard.alpha() - anti.alpha()).cwiseAbs().maxCoeff() <= 1e-6);
    CHECK(standard.bias() == doctest::Approx(anti.bias()).epsilon(1e-6).scale(1.0));
}

TEST_CASE("anti-profile equals standard on the span of the normals (linear kernel)") {
    Rng rng(32);
    const auto normals = testing_helpers::gaussian(rng, 3, 5);
    const auto mix = testing_helpers::gaussian(rng, 16, 3);
    const SampleMatrix x = mix * normals;
    Vector y(16);
    for (Eigen::Index i = 0; i < 16; ++i) y[i] = mix(i, 0) - mix(i, 1) > 0 ? 1.0 : -1.0;
    TrainOptions opts;
    opts.ridge = 0.0;
    const auto standard = train(x, y, nullptr, KernelSpec::linear(), Mode::Standard, 1.0, opts);
    const auto anti = train(x, y, &normals, KernelSpec::linear(), Mode::AntiProfile, 1.0, opts);
    const auto probes = testing_helpers::gaussian(rng, 50, 5, 2.0);
    for (Eigen::Index i = 0; i < probes.rows(); ++i)
        CHECK(std::abs(standard.decision_value(row_view(probes, i)) - anti.decision_value(row_view(probes, i))) <= 1e-6);
}

TEST_CASE("two prediction routes agree on a simulated anti-profile model") {
    SimulationConfig sim;
    sim.p = 50;
    sim.seed = 808;
    const auto data = simulate(sim);
    const auto train_set = anomalous_samples(data, SplitFilter::Training);
    const auto normals = normal_samples(data);
    Rng grng(1);
    const auto spec = KernelSpec::rbf(rbf_gamma_heuristic(normals, train_set.samples, 5, grng));
    const auto model = train(train_set.samples, train_set.labels, &normals, spec, Mode::AntiProfile, 4.0);
    Rng rng(2);
    const auto probes = testing_helpers::gaussian(rng, 20, 50, 3.0);
    for (Eigen::Index i = 0; i < probes.rows(); ++i)
        CHECK(std::abs(model.decision_value(row_view(probes, i)) - model.decision_value_dual(row_view(probes, i))) <= 1e-8);
    CHECK(support_vector_fraction(model) > 0.0);
    CHECK(support_vector_fraction(model) <= 1.0);
}

TEST_CASE("primal and dual objectives are consistent") {
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const auto x = testing_helpers::gaussian(rng, 20, 4);
        const auto z = testing_helpers::gaussian(rng, 10, 4, 0.5);
        Vector y(20);
        for (Eigen::Index i = 0; i < 20; ++i) y[i] = x(i, 0) + 0.5 * rng.normal() > 0 ? 1.0 : -1.0;
        if ((y.array() > 0).all() || (y.array() < 0).all()) y[0] = -y[0];
        const Mode mode = trial % 2 ? Mode::AntiProfile : Mode::Standard;
        const double c = trial < 3 ? 0.5 : 8.0;
        const auto model = train(x, y, &z, KernelSpec::rbf(0.3), mode, c);
        const double primal = primal_objective(model);
        const double dual = scaled_dual_objective(model);
        CHECK(primal >= dual - 1e-9);
        CHECK(primal - dual <= 1e-6 * 20);
    }
}

TEST_CASE("mode names") {
    CHECK(mode_from_string("AntiProfile") == Mode::AntiProfile);
    CHECK(mode_from_string("standard") == Mode::Standard);
    CHECK(std::string(to_string(Mode::AntiProfile)) == "antiprofile");
    CHECK_THROWS_AS(mode_from_string("other"), InputError);
}
