#include "apsvm/experiments.hpp"

#include "apsvm/error.hpp"
#include "apsvm/format.hpp"
#include "apsvm/random.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace apsvm {

void SimulationConfig::validate() const {
    if (p == 0) throw InputError("simulation: p must be at least 1");
    for (double s : {sigma_z, sigma_minus, sigma_plus})
        if (!(s > 0.0) || !std::isfinite(s)) throw InputError("simulation: standard deviations must be positive");
    if (!(sigma_z < sigma_minus && sigma_minus < sigma_plus))
        throw InputError("simulation: need sigma_z < sigma_minus < sigma_plus");
    if (n_train_per_class == 0 || n_test_per_class == 0 || n_normals == 0)
        throw InputError("simulation: sample counts must be at least 1");
}

Dataset simulate(const SimulationConfig& config) {
    config.validate();
    struct Block {
        Role role;
        Split split;
        std::size_t count;
        double sigma;
    };
    const Block blocks[] = {
        {Role::Normal, Split::Train, config.n_normals, config.sigma_z},
        {Role::Neg, Split::Train, config.n_train_per_class, config.sigma_minus},
        {Role::Pos, Split::Train, config.n_train_per_class, config.sigma_plus},
        {Role::Neg, Split::Test, config.n_test_per_class, config.sigma_minus},
        {Role::Pos, Split::Test, config.n_test_per_class, config.sigma_plus},
    };
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.count;

    Dataset data;
    const auto p = static_cast<Eigen::Index>(config.p);
    data.features.resize(static_cast<Eigen::Index>(total), p);
    Rng rng(config.seed);
    Eigen::Index row = 0;
    for (const auto& b : blocks) {
        for (std::size_t k = 0; k < b.count; ++k, ++row) {
            for (Eigen::Index c = 0; c < p; ++c) data.features(row, c) = b.sigma * rng.normal();
            data.roles.push_back(b.role);
            data.splits.push_back(b.split);
        }
    }
    return data;
}

std::vector<double> pow2_cost_grid(int lo, int hi) {
    if (lo > hi) throw InputError("cost grid: empty exponent range");
    std::vector<double> grid;
    for (int e = lo; e <= hi; ++e) grid.push_back(std::ldexp(1.0, e));
    return grid;
}

std::vector<double> parse_cost_grid(const std::string& spec) {
    if (spec.rfind("pow2:", 0) == 0) {
        const auto rest = spec.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw InputError("cost grid '" + spec + "': expected pow2:<lo>:<hi>");
        try {
            std::size_t used_lo = 0;
            std::size_t used_hi = 0;
            const int lo = std::stoi(rest.substr(0, colon), &used_lo);
            const int hi = std::stoi(rest.substr(colon + 1), &used_hi);
            if (used_lo != colon || used_hi != rest.size() - colon - 1) throw std::invalid_argument("trailing");
            return pow2_cost_grid(lo, hi);
        } catch (const std::logic_error&) {
            throw InputError("cost grid '" + spec + "': exponents must be integers");
        }
    }
    std::vector<double> grid;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        if (!parse_double(item, v) || !(v > 0.0)) throw InputError("cost grid: '" + item + "' is not a positive number");
        grid.push_back(v);
    }
    if (grid.empty()) throw InputError("cost grid is empty");
    return grid;
}

const char* to_string(SelectionProtocol protocol) noexcept {
    return protocol == SelectionProtocol::TestAccuracy ? "test-accuracy" : "cross-validation";
}

SelectionProtocol selection_from_string(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == "test" || n == "test-accuracy") return SelectionProtocol::TestAccuracy;
    if (n == "cv" || n == "cross-validation") return SelectionProtocol::CrossValidation;
    throw InputError("unknown cost selection '" + name + "' (expected test or cv)");
}

double accuracy(const TrainedModel& model, const LabelledSamples& test) {
    if (test.samples.rows() == 0) throw InputError("accuracy: no test samples");
    Eigen::Index correct = 0;
    for (Eigen::Index i = 0; i < test.samples.rows(); ++i)
        if (model.predict(row_view(test.samples, i)).label == static_cast<int>(test.labels[i])) ++correct;
    return static_cast<double>(correct) / static_cast<double>(test.samples.rows());
}

namespace {

// Better: higher accuracy, then fewer support vectors, then smaller cost.
bool better(const GridPoint& a, const GridPoint& b) {
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    if (a.n_support != b.n_support) return a.n_support < b.n_support;
    return a.cost < b.cost;
}

LabelledSamples subset(const LabelledSamples& from, const std::vector<Eigen::Index>& idx) {
    LabelledSamples out;
    out.samples = select_rows(from.samples, idx);
    out.labels.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) {
        out.labels[static_cast<Eigen::Index>(k)] = from.labels[idx[k]];
        out.rows.push_back(from.rows[static_cast<std::size_t>(idx[k])]);
    }
    return out;
}

double cv_accuracy(const LabelledSamples& train_set, const SampleMatrix& normals, const KernelSpec& spec, Mode mode, double cost,
                   const TrainOptions& options, std::size_t folds, std::size_t& support_total) {
    std::vector<std::size_t> fold_of(static_cast<std::size_t>(train_set.labels.size()));
    std::size_t seen_pos = 0;
    std::size_t seen_neg = 0;
    for (Eigen::Index i = 0; i < train_set.labels.size(); ++i)
        fold_of[static_cast<std::size_t>(i)] = (train_set.labels[i] > 0 ? seen_pos++ : seen_neg++) % folds;
    std::size_t correct = 0;
    support_total = 0;
    for (std::size_t f = 0; f < folds; ++f) {
        std::vector<Eigen::Index> fit;
        std::vector<Eigen::Index> hold;
        for (std::size_t i = 0; i < fold_of.size(); ++i) (fold_of[i] == f ? hold : fit).push_back(static_cast<Eigen::Index>(i));
        if (hold.empty()) continue;
        const LabelledSamples a = subset(train_set, fit);
        const LabelledSamples b = subset(train_set, hold);
        const TrainedModel model = train(a.samples, a.labels, &normals, spec, mode, cost, options);
        support_total += model.support_indices().size();
        for (Eigen::Index i = 0; i < b.samples.rows(); ++i)
            if (model.predict(row_view(b.samples, i)).label == static_cast<int>(b.labels[i])) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(train_set.labels.size());
}

} // namespace

CostSelection select_cost(const Dataset& data, const KernelSpec& spec, Mode mode, const std::vector<double>& cost_grid,
                          const TrainOptions& options, SelectionProtocol protocol, std::size_t cv_folds) {
    if (cost_grid.empty()) throw InputError("select_cost: empty cost grid");
    const LabelledSamples train_set = anomalous_samples(data, SplitFilter::Training);
    const LabelledSamples test_set = anomalous_samples(data, SplitFilter::Testing);
    if (test_set.samples.rows() == 0) throw InputError("select_cost: dataset has no test split");
    const SampleMatrix normals = normal_samples(data);
    if (protocol == SelectionProtocol::CrossValidation && cv_folds < 2) throw InputError("select_cost: need at least 2 folds");

    std::vector<GridPoint> grid;
    std::optional<TrainedModel> best_model;
    std::optional<GridPoint> best;
    for (double cost : cost_grid) {
        GridPoint point;
        point.cost = cost;
        try {
            if (protocol == SelectionProtocol::TestAccuracy) {
                TrainedModel model = train(train_set.samples, train_set.labels, &normals, spec, mode, cost, options);
                point.accuracy = accuracy(model, test_set);
                point.n_support = model.support_indices().size();
                point.ok = true;
                if (!best || better(point, *best)) {
                    best = point;
                    best_model.emplace(std::move(model));
                }
            } else {
                point.accuracy = cv_accuracy(train_set, normals, spec, mode, cost, options, cv_folds, point.n_support);
                point.ok = true;
                if (!best || better(point, *best)) best = point;
            }
        } catch (const ConvergenceError& e) {
            point.error = e.what();
        } catch (const NumericalError& e) {
            point.error = e.what();
        }
        grid.push_back(point);
    }
    if (!best) throw ExperimentError("select_cost: training failed at every grid point");
    if (protocol == SelectionProtocol::CrossValidation)
        best_model.emplace(train(train_set.samples, train_set.labels, &normals, spec, mode, best->cost, options));
    const double acc = accuracy(*best_model, test_set);
    return CostSelection{best->cost, std::move(*best_model), acc, std::move(grid)};
}

void BenchmarkConfig::validate() const {
    if (p_values.empty()) throw InputError("benchmark: empty p list");
    for (std::size_t p : p_values)
        if (p == 0) throw InputError("benchmark: p values must be positive");
    if (n_repeats == 0) throw InputError("benchmark: need at least one repeat");
    if (modes.empty()) throw InputError("benchmark: no modes selected");
    if (cost_grid.empty()) throw InputError("benchmark: empty cost grid");
    if (gamma && !(*gamma > 0.0)) throw InputError("benchmark: gamma must be positive");
    SimulationConfig probe = simulation;
    probe.validate();
}

std::vector<ExperimentRecord> run_cell(const BenchmarkConfig& config, std::size_t p, std::size_t repeat) {
    SimulationConfig sim = config.simulation;
    sim.p = p;
    sim.seed = derive_cell_seed(config.base_seed, p, repeat);
    const Dataset data = simulate(sim);

    KernelSpec spec = KernelSpec::linear();
    if (config.kernel == KernelFamily::Rbf) {
        double gamma = 0.0;
        if (config.gamma) {
            gamma = *config.gamma;
        } else {
            Rng rng(derive_stream(sim.seed, 1));
            const LabelledSamples train_set = anomalous_samples(data, SplitFilter::Training);
            gamma = rbf_gamma_heuristic(normal_samples(data), train_set.samples, config.gamma_pairs, rng, config.gamma_distance);
        }
        spec = KernelSpec::rbf(gamma);
    }

    std::vector<ExperimentRecord> out;
    for (Mode mode : config.modes) {
        const CostSelection sel = select_cost(data, spec, mode, config.cost_grid, config.train, config.selection, config.cv_folds);
        ExperimentRecord r;
        r.p = p;
        r.mode = mode;
        r.repeat_index = repeat;
        r.seed = sim.seed;
        r.gamma = spec.gamma();
        r.best_cost = sel.best_cost;
        r.lambda = sel.model.lambda();
        r.best_accuracy = sel.accuracy;
        r.sv_fraction_at_best = support_vector_fraction(sel.model);
        r.n_support = sel.model.support_indices().size();
        r.failed_grid_points = static_cast<std::size_t>(std::count_if(sel.grid.begin(), sel.grid.end(), [](const GridPoint& g) { return !g.ok; }));
        out.push_back(r);
    }
    return out;
}

std::vector<AggregateRecord> aggregate_records(const BenchmarkConfig& config, const std::vector<ExperimentRecord>& records) {
    std::vector<AggregateRecord> out;
    for (std::size_t p : config.p_values) {
        for (Mode mode : config.modes) {
            AggregateRecord agg;
            agg.p = p;
            agg.mode = mode;
            double acc = 0.0;
            double svf = 0.0;
            for (const auto& r : records) {
                if (r.p != p || r.mode != mode) continue;
                acc += r.best_accuracy;
                svf += r.sv_fraction_at_best;
                ++agg.n_repeats;
            }
            if (agg.n_repeats > 0) {
                agg.mean_accuracy = acc / static_cast<double>(agg.n_repeats);
                agg.mean_sv_fraction = svf / static_cast<double>(agg.n_repeats);
            }
            out.push_back(agg);
        }
    }
    return out;
}

ExperimentReport benchmark(const BenchmarkConfig& config) {
    config.validate();
    const std::size_t n_cells = config.p_values.size() * config.n_repeats;
    std::vector<std::vector<ExperimentRecord>> cells(n_cells);
    std::vector<std::string> failures(n_cells);
    const auto total = static_cast<long>(n_cells);
#pragma omp parallel for schedule(dynamic, 1)
    for (long c = 0; c < total; ++c) {
        const auto cell = static_cast<std::size_t>(c);
        try {
            cells[cell] = run_cell(config, config.p_values[cell / config.n_repeats], cell % config.n_repeats);
        } catch (const std::exception& e) {
            failures[cell] = e.what();
        }
    }
    for (std::size_t c = 0; c < n_cells; ++c)
        if (!failures[c].empty())
            throw ExperimentError("benchmark cell p=" + std::to_string(config.p_values[c / config.n_repeats]) +
                                  " repeat=" + std::to_string(c % config.n_repeats) + ": " + failures[c]);

    ExperimentReport report;
    report.config = config;
    for (auto& cell : cells)
        for (auto& r : cell) report.records.push_back(r);
    report.aggregates = aggregate_records(config, report.records);
    return report;
}

FeatureRanking variance_ratio_feature_ranking(const Dataset& data, std::size_t n_features) {
    data.validate();
    const LabelledSamples train_set = anomalous_samples(data, SplitFilter::Training);
    const Eigen::Index p = data.dim();
    if (n_features == 0 || n_features > static_cast<std::size_t>(p))
        throw InputError("feature ranking: n_features must be between 1 and " + std::to_string(p));
    std::vector<Eigen::Index> pos;
    std::vector<Eigen::Index> neg;
    for (Eigen::Index i = 0; i < train_set.labels.size(); ++i) (train_set.labels[i] > 0 ? pos : neg).push_back(i);
    if (pos.size() < 2 || neg.size() < 2) throw InputError("feature ranking: each anomalous class needs at least 2 samples");

    const auto variance = [&](const std::vector<Eigen::Index>& rows, Eigen::Index c) {
        double mean = 0.0;
        for (Eigen::Index r : rows) mean += train_set.samples(r, c);
        mean /= static_cast<double>(rows.size());
        double ss = 0.0;
        for (Eigen::Index r : rows) ss += (train_set.samples(r, c) - mean) * (train_set.samples(r, c) - mean);
        return ss / static_cast<double>(rows.size() - 1);
    };

    FeatureRanking out;
    out.log_ratios.resize(p);
    out.flagged.assign(static_cast<std::size_t>(p), false);
    for (Eigen::Index c = 0; c < p; ++c) {
        const double vp = variance(pos, c);
        const double vn = variance(neg, c);
        if (vn <= 0.0) {
            out.flagged[static_cast<std::size_t>(c)] = true;
            out.log_ratios[c] = std::numeric_limits<double>::quiet_NaN();
        } else {
            out.log_ratios[c] = std::log(vp / vn);
        }
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const bool fa = out.flagged[static_cast<std::size_t>(a)];
        const bool fb = out.flagged[static_cast<std::size_t>(b)];
        if (fa != fb) return fb;
        if (fa) return false;
        return out.log_ratios[a] > out.log_ratios[b];
    });
    order.resize(n_features);
    out.selected = std::move(order);
    return out;
}

} // namespace apsvm
