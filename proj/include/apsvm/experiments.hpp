#pragma once

#include "apsvm/dataset.hpp"
#include "apsvm/kernels.hpp"
#include "apsvm/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apsvm {

/// Three zero-mean Gaussian classes with per-feature standard deviations
/// sigma_z < sigma_minus < sigma_plus.
struct SimulationConfig {
    std::size_t p = 100;
    double sigma_z = 1.0;
    double sigma_minus = 2.0;
    double sigma_plus = 4.0;
    std::size_t n_train_per_class = 20;
    std::size_t n_test_per_class = 5;
    std::size_t n_normals = 20;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Rows, in generation order: normals (split train), neg train, pos train, neg test, pos test.
/// Every entry is sigma * Rng::normal(), drawn row by row from Rng(seed).
Dataset simulate(const SimulationConfig& config);

/// 2^lo, 2^(lo+1), ..., 2^hi.
std::vector<double> pow2_cost_grid(int lo = -8, int hi = 8);

/// "pow2:-8:8" or a comma-separated list of positive costs.
std::vector<double> parse_cost_grid(const std::string& spec);

enum class SelectionProtocol {
    /// Pick the cost with the best test accuracy; ties go to fewer support vectors, then smaller cost.
    TestAccuracy,
    /// Stratified k-fold cross-validation on the training split, then refit.
    CrossValidation,
};

const char* to_string(SelectionProtocol protocol) noexcept;
SelectionProtocol selection_from_string(const std::string& name);

struct GridPoint {
    double cost = 0.0;
    bool ok = false;
    double accuracy = 0.0; ///< test accuracy (test-accuracy selection) or mean CV accuracy
    std::size_t n_support = 0;
    std::string error;
};

struct CostSelection {
    double best_cost = 0.0;
    TrainedModel model;
    double accuracy = 0.0; ///< test accuracy of `model`
    std::vector<GridPoint> grid;
};

/// Fraction of the labelled samples whose predicted label matches.
double accuracy(const TrainedModel& model, const LabelledSamples& test);

/// Trains at every grid cost. Solver failures at a grid point are recorded in
/// `grid` and skipped; ExperimentError if every point fails.
CostSelection select_cost(const Dataset& data, const KernelSpec& spec, Mode mode, const std::vector<double>& cost_grid,
                          const TrainOptions& options = {}, SelectionProtocol protocol = SelectionProtocol::TestAccuracy,
                          std::size_t cv_folds = 5);

struct BenchmarkConfig {
    SimulationConfig simulation; ///< p and seed are overridden per cell
    std::vector<std::size_t> p_values = {10, 50, 100, 500, 1000};
    std::size_t n_repeats = 10;
    std::vector<Mode> modes = {Mode::Standard, Mode::AntiProfile};
    std::vector<double> cost_grid = pow2_cost_grid();
    KernelFamily kernel = KernelFamily::Rbf;
    /// Fixed RBF gamma; when empty the heuristic runs per (p, repeat).
    std::optional<double> gamma;
    std::size_t gamma_pairs = 5;
    DistanceMode gamma_distance = DistanceMode::SquaredEuclidean;
    SelectionProtocol selection = SelectionProtocol::TestAccuracy;
    std::size_t cv_folds = 5;
    TrainOptions train;
    std::uint64_t base_seed = 0;

    void validate() const;
};

struct ExperimentRecord {
    std::size_t p = 0;
    Mode mode = Mode::Standard;
    std::size_t repeat_index = 0;
    std::uint64_t seed = 0;
    double gamma = 0.0; ///< 0 for the linear kernel
    double best_cost = 0.0;
    double lambda = 0.0; ///< 1 / (n C)
    double best_accuracy = 0.0;
    double sv_fraction_at_best = 0.0;
    std::size_t n_support = 0;
    std::size_t failed_grid_points = 0;
};

struct AggregateRecord {
    std::size_t p = 0;
    Mode mode = Mode::Standard;
    std::size_t n_repeats = 0;
    double mean_accuracy = 0.0;
    double mean_sv_fraction = 0.0;
};

struct ExperimentReport {
    BenchmarkConfig config;
    std::vector<ExperimentRecord> records; ///< ordered by (p, repeat, mode)
    std::vector<AggregateRecord> aggregates; ///< ordered by (p, mode)
};

/// One simulated draw per (p, repeat), shared by all modes. Cells run in
/// parallel and each owns its RNG streams, so the report is independent of the
/// thread count.
ExperimentReport benchmark(const BenchmarkConfig& config);

/// Runs a single (p, repeat) cell; exposed for the serial reference and tests.
std::vector<ExperimentRecord> run_cell(const BenchmarkConfig& config, std::size_t p, std::size_t repeat);

std::vector<AggregateRecord> aggregate_records(const BenchmarkConfig& config, const std::vector<ExperimentRecord>& records);

struct FeatureRanking {
    std::vector<Eigen::Index> selected; ///< best first
    Vector log_ratios;                  ///< per feature; NaN where flagged
    std::vector<bool> flagged;          ///< zero variance in the neg class
};

/// Ranks features by log(var(pos) / var(neg)) over the training-split anomalous
/// samples (unbiased variances) and returns the n_features largest. Ties go to
/// the lower index; features with zero neg-class variance rank last.
FeatureRanking variance_ratio_feature_ranking(const Dataset& data, std::size_t n_features);

} // namespace apsvm
