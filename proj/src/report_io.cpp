#include "apsvm/report_io.hpp"

#include "apsvm/error.hpp"
#include "apsvm/format.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace apsvm {

using json = nlohmann::ordered_json;

json to_json(const HeterogeneityReport& report) {
    json out;
    out["m"] = report.m;
    out["n_draws"] = report.n_draws;
    out["estimator"] = "exp(mean(log det K_Z - log det K_A))";
    out["mean_log_det_ratio"] = report.mean_log_det_ratio;
    out["std_error"] = report.std_error;
    out["ratio_estimate"] = report.ratio_estimate;
    out["epsilon_satisfied"] = report.epsilon_satisfied;
    out["per_draw_log_ratios"] = report.per_draw_log_ratios;
    out["flagged_draws"] = report.flagged_draws;
    return out;
}

json to_json(const BenchmarkConfig& config) {
    json out;
    out["p_values"] = config.p_values;
    out["n_repeats"] = config.n_repeats;
    json modes = json::array();
    for (Mode m : config.modes) modes.push_back(to_string(m));
    out["modes"] = modes;
    out["cost_grid"] = config.cost_grid;
    json kernel;
    kernel["family"] = to_string(config.kernel);
    if (config.kernel == KernelFamily::Rbf) {
        if (config.gamma)
            kernel["gamma"] = *config.gamma;
        else
            kernel["gamma"] = "auto";
        kernel["gamma_pairs"] = config.gamma_pairs;
        kernel["gamma_distance"] = config.gamma_distance == DistanceMode::Euclidean ? "euclidean" : "squared-euclidean";
    }
    out["kernel"] = kernel;
    out["selection"] = to_string(config.selection);
    if (config.selection == SelectionProtocol::CrossValidation) out["cv_folds"] = config.cv_folds;
    json sim;
    sim["sigma_z"] = config.simulation.sigma_z;
    sim["sigma_minus"] = config.simulation.sigma_minus;
    sim["sigma_plus"] = config.simulation.sigma_plus;
    sim["n_train_per_class"] = config.simulation.n_train_per_class;
    sim["n_test_per_class"] = config.simulation.n_test_per_class;
    sim["n_normals"] = config.simulation.n_normals;
    out["simulation"] = sim;
    out["ridge"] = config.train.ridge;
    out["eig_tolerance"] = config.train.eig_tolerance;
    out["solver_tolerance"] = config.train.solver.tolerance;
    out["solver_max_iterations"] = config.train.solver.max_iterations;
    out["seed"] = config.base_seed;
    return out;
}

json to_json(const ExperimentReport& report) {
    json out;
    out["schema_version"] = kBenchmarkSchemaVersion;
    json prov;
    prov["toolkit_version"] = APSVM_VERSION;
    prov["seed"] = report.config.base_seed;
    prov["config"] = to_json(report.config);
    out["provenance"] = prov;
    json records = json::array();
    for (const auto& r : report.records) {
        json j;
        j["p"] = r.p;
        j["mode"] = to_string(r.mode);
        j["repeat_index"] = r.repeat_index;
        j["seed"] = r.seed;
        j["gamma"] = r.gamma;
        j["best_cost"] = r.best_cost;
        j["lambda"] = r.lambda;
        j["best_accuracy"] = r.best_accuracy;
        j["sv_fraction_at_best"] = r.sv_fraction_at_best;
        j["n_support"] = r.n_support;
        j["failed_grid_points"] = r.failed_grid_points;
        records.push_back(j);
    }
    out["records"] = records;
    json aggregates = json::array();
    for (const auto& a : report.aggregates) {
        json j;
        j["p"] = a.p;
        j["mode"] = to_string(a.mode);
        j["n_repeats"] = a.n_repeats;
        j["mean_accuracy"] = a.mean_accuracy;
        j["mean_sv_fraction"] = a.mean_sv_fraction;
        aggregates.push_back(j);
    }
    out["aggregates"] = aggregates;
    return out;
}

std::string records_csv(const ExperimentReport& report) {
    std::string out = "p,mode,repeat_index,seed,gamma,best_cost,lambda,best_accuracy,sv_fraction_at_best,n_support,failed_grid_points\n";
    for (const auto& r : report.records) {
        out += std::to_string(r.p) + ',' + to_string(r.mode) + ',' + std::to_string(r.repeat_index) + ',' + std::to_string(r.seed) + ',' +
               format_double(r.gamma) + ',' + format_double(r.best_cost) + ',' + format_double(r.lambda) + ',' +
               format_double(r.best_accuracy) + ',' + format_double(r.sv_fraction_at_best) + ',' + std::to_string(r.n_support) + ',' +
               std::to_string(r.failed_grid_points) + '\n';
    }
    return out;
}

namespace {

double metric_of(const AggregateRecord& a, const std::string& metric) {
    if (metric == "accuracy") return a.mean_accuracy;
    if (metric == "sv_fraction") return a.mean_sv_fraction;
    throw InputError("unknown metric '" + metric + "'");
}

} // namespace

std::string series_csv(const ExperimentReport& report, const std::string& metric) {
    std::string out = "p";
    for (Mode m : report.config.modes) out += std::string(",") + to_string(m);
    out += '\n';
    for (std::size_t p : report.config.p_values) {
        out += std::to_string(p);
        for (Mode m : report.config.modes) {
            for (const auto& a : report.aggregates)
                if (a.p == p && a.mode == m) out += ',' + format_double(metric_of(a, metric));
        }
        out += '\n';
    }
    return out;
}

std::string series_svg(const ExperimentReport& report, const std::string& metric) {
    constexpr double width = 480.0;
    constexpr double height = 320.0;
    constexpr double left = 60.0;
    constexpr double right = 20.0;
    constexpr double top = 30.0;
    constexpr double bottom = 50.0;
    const auto& ps = report.config.p_values;
    double xmin = std::log10(static_cast<double>(*std::min_element(ps.begin(), ps.end())));
    double xmax = std::log10(static_cast<double>(*std::max_element(ps.begin(), ps.end())));
    if (xmax - xmin < 1e-9) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    const auto sx = [&](double p) { return left + (std::log10(p) - xmin) / (xmax - xmin) * (width - left - right); };
    const auto sy = [&](double v) { return top + (1.0 - v) * (height - top - bottom); };
    const char* colours[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">"
        << (metric == "accuracy" ? "mean test accuracy" : "mean support-vector fraction") << " vs p</text>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << sy(0) << "\" x2=\"" << width - right << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << sy(0) << "\" x2=\"" << left << "\" y2=\"" << sy(1) << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = k / 4.0;
        svg << "<text x=\"" << left - 6 << "\" y=\"" << sy(v) + 4 << "\" text-anchor=\"end\" font-size=\"10\">" << v << "</text>\n";
    }
    for (std::size_t p : ps)
        svg << "<text x=\"" << sx(static_cast<double>(p)) << "\" y=\"" << sy(0) + 16 << "\" text-anchor=\"middle\" font-size=\"10\">" << p
            << "</text>\n";
    std::size_t series = 0;
    for (Mode m : report.config.modes) {
        std::ostringstream points;
        for (std::size_t p : ps)
            for (const auto& a : report.aggregates)
                if (a.p == p && a.mode == m) points << sx(static_cast<double>(p)) << ',' << sy(metric_of(a, metric)) << ' ';
        const char* colour = colours[series % 4];
        svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"" << points.str() << "\"/>\n";
        svg << "<text x=\"" << left + 10 << "\" y=\"" << top + 14 + 14.0 * static_cast<double>(series) << "\" fill=\"" << colour
            << "\" font-size=\"11\">" << to_string(m) << "</text>\n";
        ++series;
    }
    svg << "</svg>\n";
    return svg.str();
}


void write_json(const std::string& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

} // namespace apsvm
