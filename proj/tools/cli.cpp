#include "cli.hpp"

#include "json_config.hpp"

#include "apsvm/dataset.hpp"
#include "apsvm/diagnostics.hpp"
#include "apsvm/error.hpp"
#include "apsvm/experiments.hpp"
#include "apsvm/format.hpp"
#include "apsvm/model_io.hpp"
#include "apsvm/report_io.hpp"

#include "CLI11.hpp"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace apsvm::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
    std::uint64_t seed = 0;
    int threads = 0;
};

struct KernelArgs {
    std::string kernel = "rbf";
    std::string gamma = "auto";
    std::string gamma_distance = "squared";
    std::size_t gamma_pairs = 5;

    void add(CLI::App* app) {
        app->add_option("--kernel", kernel, "linear or rbf")->capture_default_str();
        app->add_option("--gamma", gamma, "RBF gamma, or 'auto' for the data-driven heuristic")->capture_default_str();
        app->add_option("--gamma-distance", gamma_distance, "heuristic distance: squared or euclidean")->capture_default_str();
        app->add_option("--gamma-pairs", gamma_pairs, "samples drawn per class by the heuristic")->capture_default_str();
    }

    DistanceMode distance() const {
        if (gamma_distance == "squared" || gamma_distance == "squared-euclidean") return DistanceMode::SquaredEuclidean;
        if (gamma_distance == "euclidean") return DistanceMode::Euclidean;
        throw InputError("--gamma-distance must be squared or euclidean");
    }

    bool auto_gamma() const { return gamma == "auto"; }

    double fixed_gamma() const {
        double g = 0.0;
        if (!parse_double(gamma, g) || !(g > 0.0)) throw InputError("--gamma must be 'auto' or a positive number, got '" + gamma + "'");
        return g;
    }

    /// Resolves the kernel; the heuristic draws from Rng(seed) over normals vs anomalous.
    KernelSpec resolve(const SampleMatrix& normals, const SampleMatrix& anomalous, std::uint64_t seed) const {
        if (kernel_family_from_string(kernel) == KernelFamily::Linear) return KernelSpec::linear();
        if (!auto_gamma()) return KernelSpec::rbf(fixed_gamma());
        if (normals.rows() == 0) throw InputError("--gamma auto needs normal samples in the data");
        Rng rng(seed);
        return KernelSpec::rbf(rbf_gamma_heuristic(normals, anomalous, gamma_pairs, rng, distance()));
    }

    json to_json() const {
        json j;
        j["kernel"] = kernel;
        if (kernel_family_from_string(kernel) == KernelFamily::Rbf) {
            j["gamma"] = gamma;
            j["gamma_distance"] = gamma_distance;
            j["gamma_pairs"] = gamma_pairs;
        }
        return j;
    }
};

json kernel_json(const KernelSpec& spec) {
    json j;
    j["family"] = to_string(spec.family());
    if (spec.family() == KernelFamily::Rbf) j["gamma"] = spec.gamma();
    return j;
}

CsvOptions csv_options(const std::string& class_map) {
    CsvOptions options;
    if (!class_map.empty()) options.class_map = parse_class_map(class_map);
    return options;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        if (!parse_double(item, v)) throw InputError(std::string(what) + ": '" + item + "' is not a number");
        out.push_back(v);
    }
    if (out.empty()) throw InputError(std::string(what) + " is empty");
    return out;
}

std::vector<std::size_t> parse_counts(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    for (double v : parse_list(text, what)) {
        if (!(v >= 1.0) || v != std::floor(v)) throw InputError(std::string(what) + ": entries must be positive integers");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InputError("cannot create directory '" + dir + "': " + ec.message());
}

std::string sibling_csv(const std::string& json_path) {
    std::filesystem::path p(json_path);
    p.replace_extension(".csv");
    return p.string();
}

void configure_logging() {
    auto logger = spdlog::stderr_logger_st("apsvm");
    logger->set_pattern("[apsvm %l] %v");
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("APSVM_LOG")) level = spdlog::level::from_str(env);
    logger->set_level(level);
    spdlog::set_default_logger(logger);
}

} // namespace

int run(const std::vector<std::string>& args) {
    if (!spdlog::get("apsvm")) configure_logging();

    CLI::App app{"Anti-profile SVM toolkit: anomaly classification against a stable normal class"};
    app.set_version_flag("--version", APSVM_VERSION);
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config file (command-line flags take precedence)");
    app.allow_config_extras(CLI::config_extras_mode::error);
    // Global flags may also follow the subcommand: `simulate --p 10 --seed 3`.
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

    // train
    auto* train_cmd = app.add_subcommand("train", "train a standard or anti-profile SVM");
    std::string train_data, train_out, train_mode = "antiprofile", train_grid, train_selection = "test", train_class_map;
    std::optional<double> train_cost;
    double ridge = kDefaultRidge, eig_tol = kDefaultEigTolerance, tol = 1e-6;
    std::uint64_t max_iter = 10'000'000;
    std::size_t cv_folds = 5;
    KernelArgs train_kernel;
    train_cmd->add_option("--data", train_data, "training CSV")->required();
    train_cmd->add_option("--out", train_out, "model JSON path")->required();
    train_cmd->add_option("--mode", train_mode, "antiprofile or standard")->capture_default_str();
    train_kernel.add(train_cmd);
    auto* cost_opt = train_cmd->add_option("--cost", train_cost, "single cost C");
    train_cmd->add_option("--cost-grid", train_grid, "cost grid: pow2:<lo>:<hi> or c1,c2,...")->excludes(cost_opt);
    train_cmd->add_option("--selection", train_selection, "grid selection: test (best test accuracy) or cv")->capture_default_str();
    train_cmd->add_option("--cv-folds", cv_folds, "folds for --selection cv")->capture_default_str();
    train_cmd->add_option("--ridge", ridge, "ridge added to K_n before pseudo-inversion")->capture_default_str();
    train_cmd->add_option("--eig-tolerance", eig_tol, "relative eigenvalue cutoff of the pseudo-inverse")->capture_default_str();
    train_cmd->add_option("--tol", tol, "SMO stopping tolerance")->capture_default_str();
    train_cmd->add_option("--max-iter", max_iter, "SMO pair-update budget")->capture_default_str();
    train_cmd->add_option("--class-map", train_class_map, "label=role pairs, e.g. healthy=normal,adenoma=neg,carcinoma=pos");

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "apply a trained model to a CSV");
    std::string predict_model, predict_data, predict_out, predict_class_map;
    bool predict_all = false;
    predict_cmd->add_option("--model", predict_model, "model JSON")->required();
    predict_cmd->add_option("--data", predict_data, "CSV to score")->required();
    predict_cmd->add_option("--out", predict_out, "predictions CSV")->required();
    predict_cmd->add_flag("--all-rows", predict_all, "score every row, not only anomalous test rows");
    predict_cmd->add_option("--class-map", predict_class_map, "label=role pairs");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "draw a three-class Gaussian dataset");
    SimulationConfig sim;
    std::string sim_sigmas = "1,2,4", sim_out;
    sim_cmd->add_option("--p", sim.p, "feature count")->required();
    sim_cmd->add_option("--sigmas", sim_sigmas, "sigma_z,sigma_minus,sigma_plus")->capture_default_str();
    sim_cmd->add_option("--n-train", sim.n_train_per_class, "training samples per anomalous class")->capture_default_str();
    sim_cmd->add_option("--n-test", sim.n_test_per_class, "test samples per anomalous class")->capture_default_str();
    sim_cmd->add_option("--n-normals", sim.n_normals, "normal samples")->capture_default_str();
    sim_cmd->add_option("--out", sim_out, "output CSV")->required();

    // diagnose
    auto* diag_cmd = app.add_subcommand("diagnose", "heterogeneity check, eigen-spectra and PCA embedding");
    std::string diag_data, diag_out, diag_plots, diag_class_map;
    std::size_t diag_m = 10, diag_draws = 200;
    Eigen::Index diag_dims = 2;
    KernelArgs diag_kernel;
    diag_kernel.kernel = "linear";
    diag_cmd->add_option("--data", diag_data, "CSV with normal, neg and pos samples")->required();
    diag_kernel.add(diag_cmd);
    diag_cmd->add_option("--m", diag_m, "subsample size per draw")->capture_default_str();
    diag_cmd->add_option("--draws", diag_draws, "Monte-Carlo draws")->capture_default_str();
    diag_cmd->add_option("--pca-dims", diag_dims, "PCA embedding dimension")->capture_default_str();
    diag_cmd->add_option("--out", diag_out, "report JSON")->required();
    diag_cmd->add_option("--plots-dir", diag_plots, "directory for eigen-spectrum and PCA CSV series");
    diag_cmd->add_option("--class-map", diag_class_map, "label=role pairs");

    // benchmark
    auto* bench_cmd = app.add_subcommand("benchmark", "repeated simulation benchmark, standard vs anti-profile");
    BenchmarkConfig bench;
    std::string bench_p = "10,50,100,500,1000", bench_sigmas = "1,2,4", bench_grid = "pow2:-8:8", bench_modes = "standard,antiprofile",
                bench_selection = "test", bench_out, bench_csv, bench_plots;
    bool bench_no_svg = false;
    KernelArgs bench_kernel;
    bench_cmd->add_option("--p-list", bench_p, "comma-separated feature counts")->capture_default_str();
    bench_cmd->add_option("--repeats", bench.n_repeats, "repeats per p")->capture_default_str();
    bench_cmd->add_option("--sigmas", bench_sigmas, "sigma_z,sigma_minus,sigma_plus")->capture_default_str();
    bench_cmd->add_option("--n-train", bench.simulation.n_train_per_class, "training samples per anomalous class")->capture_default_str();
    bench_cmd->add_option("--n-test", bench.simulation.n_test_per_class, "test samples per anomalous class")->capture_default_str();
    bench_cmd->add_option("--n-normals", bench.simulation.n_normals, "normal samples")->capture_default_str();
    bench_kernel.add(bench_cmd);
    bench_cmd->add_option("--cost-grid", bench_grid, "pow2:<lo>:<hi> or c1,c2,...")->capture_default_str();
    bench_cmd->add_option("--modes", bench_modes, "comma-separated modes")->capture_default_str();
    bench_cmd->add_option("--selection", bench_selection, "test or cv")->capture_default_str();
    bench_cmd->add_option("--cv-folds", bench.cv_folds, "folds for --selection cv")->capture_default_str();
    bench_cmd->add_option("--ridge", bench.train.ridge, "ridge added to K_n")->capture_default_str();
    bench_cmd->add_option("--tol", bench.train.solver.tolerance, "SMO stopping tolerance")->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "report JSON")->required();
    bench_cmd->add_option("--csv", bench_csv, "tidy per-record CSV (default: report path with .csv)");
    bench_cmd->add_option("--plots-dir", bench_plots, "directory for accuracy / SV-fraction series");
    bench_cmd->add_flag("--no-svg", bench_no_svg, "skip SVG charts");

    // rank-features
    auto* rank_cmd = app.add_subcommand("rank-features", "rank features by log var(pos) / var(neg)");
    std::string rank_data, rank_out, rank_select_out, rank_class_map;
    std::size_t rank_n = 10;
    rank_cmd->add_option("--data", rank_data, "CSV with neg and pos samples")->required();
    rank_cmd->add_option("--n-features", rank_n, "features to select")->capture_default_str();
    rank_cmd->add_option("--out", rank_out, "ranking CSV")->required();
    rank_cmd->add_option("--select-out", rank_select_out, "write the dataset restricted to the selected features");
    rank_cmd->add_option("--class-map", rank_class_map, "label=role pairs");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (g.threads > 0) omp_set_num_threads(g.threads);
        json globals;
        globals["seed"] = g.seed;
        globals["toolkit_version"] = APSVM_VERSION;

        if (*train_cmd) {
            const Dataset data = ingest_csv(train_data, csv_options(train_class_map));
            const LabelledSamples train_set = anomalous_samples(data, SplitFilter::Training);
            const SampleMatrix normals = normal_samples(data);
            const Mode mode = mode_from_string(train_mode);
            const KernelSpec spec = train_kernel.resolve(normals, train_set.samples, g.seed);
            spdlog::info("kernel {}", spec.describe());
            TrainOptions options;
            options.ridge = ridge;
            options.eig_tolerance = eig_tol;
            options.solver.tolerance = tol;
            options.solver.max_iterations = max_iter;

            json provenance = globals;
            json config = train_kernel.to_json();
            config["mode"] = to_string(mode);
            config["ridge"] = ridge;
            config["eig_tolerance"] = eig_tol;
            config["tol"] = tol;
            config["max_iter"] = max_iter;
            provenance["config"] = config;
            provenance["kernel_resolved"] = kernel_json(spec);

            if (train_cost) {
                const TrainedModel model = train(train_set.samples, train_set.labels, &normals, spec, mode, *train_cost, options);
                save_model(model, train_out, provenance);
                spdlog::info("trained: {} support vectors of {}", model.support_indices().size(), model.labels().size());
            } else {
                const auto grid = parse_cost_grid(train_grid.empty() ? "pow2:-8:8" : train_grid);
                const SelectionProtocol protocol = selection_from_string(train_selection);
                CostSelection sel = select_cost(data, spec, mode, grid, options, protocol, cv_folds);
                json sel_json;
                sel_json["protocol"] = to_string(protocol);
                sel_json["cost_grid"] = grid;
                sel_json["best_cost"] = sel.best_cost;
                sel_json["test_accuracy"] = sel.accuracy;
                json points = json::array();
                for (const auto& p : sel.grid) {
                    json pj;
                    pj["cost"] = p.cost;
                    pj["ok"] = p.ok;
                    pj["accuracy"] = p.accuracy;
                    pj["n_support"] = p.n_support;
                    if (!p.ok) pj["error"] = p.error;
                    points.push_back(pj);
                }
                sel_json["grid"] = points;
                provenance["selection"] = sel_json;
                save_model(sel.model, train_out, provenance);
                spdlog::info("selected C={} (test accuracy {})", sel.best_cost, sel.accuracy);
            }
        } else if (*predict_cmd) {
            const TrainedModel model = load_model(predict_model);
            CsvOptions options = csv_options(predict_class_map);
            options.require_class = false;
            const Dataset data = ingest_csv(predict_data, options);
            if (data.dim() != model.dimension())
                throw InputError("data has " + std::to_string(data.dim()) + " features, model expects " + std::to_string(model.dimension()));
            const bool any_test = std::find(data.splits.begin(), data.splits.end(), Split::Test) != data.splits.end();
            std::string out = "row_id,decision_value,label\n";
            std::size_t scored = 0;
            for (Eigen::Index i = 0; i < data.size(); ++i) {
                const auto k = static_cast<std::size_t>(i);
                if (!predict_all && (data.roles[k] == Role::Normal || (any_test && data.splits[k] != Split::Test))) continue;
                const Prediction pr = model.predict(row_view(data.features, i));
                out += std::to_string(i) + ',' + format_double(pr.decision_value) + ',' + (pr.label > 0 ? "pos" : "neg") + '\n';
                ++scored;
            }
            write_text(predict_out, out);
            spdlog::info("scored {} rows", scored);
        } else if (*sim_cmd) {
            const auto sig = parse_list(sim_sigmas, "--sigmas");
            if (sig.size() != 3) throw InputError("--sigmas needs three values");
            sim.sigma_z = sig[0];
            sim.sigma_minus = sig[1];
            sim.sigma_plus = sig[2];
            sim.seed = g.seed;
            write_csv(simulate(sim), sim_out);
        } else if (*diag_cmd) {
            const Dataset data = ingest_csv(diag_data, csv_options(diag_class_map));
            data.validate();
            const SampleMatrix normals = normal_samples(data);
            const LabelledSamples all = anomalous_samples(data, SplitFilter::All);
            std::vector<Eigen::Index> neg_rows;
            std::vector<Eigen::Index> pos_rows;
            for (Eigen::Index i = 0; i < all.labels.size(); ++i) (all.labels[i] > 0 ? pos_rows : neg_rows).push_back(i);
            const SampleMatrix neg = select_rows(all.samples, neg_rows);
            const SampleMatrix pos = select_rows(all.samples, pos_rows);
            if (normals.rows() == 0 || neg.rows() == 0 || pos.rows() == 0)
                throw InputError("diagnose needs normal, neg and pos samples");
            const KernelSpec spec = diag_kernel.resolve(normals, all.samples, g.seed);

            json report;
            report["schema_version"] = kDiagnoseSchemaVersion;
            json provenance = globals;
            json config = diag_kernel.to_json();
            config["m"] = diag_m;
            config["draws"] = diag_draws;
            config["pca_dims"] = diag_dims;
            provenance["config"] = config;
            provenance["kernel_resolved"] = kernel_json(spec);
            report["provenance"] = provenance;
            json het;
            het["normal_vs_neg"] = to_json(heterogeneity_check(normals, neg, spec, diag_m, diag_draws, derive_stream(g.seed, 11)));
            het["normal_vs_pos"] = to_json(heterogeneity_check(normals, pos, spec, diag_m, diag_draws, derive_stream(g.seed, 12)));
            report["heterogeneity"] = het;
            json spectra;
            const Vector sz = eigen_spectrum(gram_matrix(spec, normals));
            const Vector sn = eigen_spectrum(gram_matrix(spec, neg));
            const Vector sp = eigen_spectrum(gram_matrix(spec, pos));
            spectra["normal"] = std::vector<double>(sz.data(), sz.data() + sz.size());
            spectra["neg"] = std::vector<double>(sn.data(), sn.data() + sn.size());
            spectra["pos"] = std::vector<double>(sp.data(), sp.data() + sp.size());
            report["eigen_spectra"] = spectra;
            const PcaEmbedding pca = pca_embed(data.features, diag_dims);
            json pj;
            pj["variances"] = std::vector<double>(pca.variances.data(), pca.variances.data() + pca.variances.size());
            json scores = json::array();
            for (Eigen::Index i = 0; i < data.size(); ++i) {
                json row;
                row["row_id"] = i;
                row["role"] = to_string(data.roles[static_cast<std::size_t>(i)]);
                json s = json::array();
                for (Eigen::Index c = 0; c < diag_dims; ++c) s.push_back(pca.scores(i, c));
                row["scores"] = s;
                scores.push_back(row);
            }
            pj["scores"] = scores;
            report["pca"] = pj;
            write_json(diag_out, report);

            if (!diag_plots.empty()) {
                ensure_dir(diag_plots);
                std::string spec_csv = "class,index,eigenvalue\n";
                const std::pair<const char*, const Vector*> classes[] = {{"normal", &sz}, {"neg", &sn}, {"pos", &sp}};
                for (const auto& [name, values] : classes)
                    for (Eigen::Index k = 0; k < values->size(); ++k)
                        spec_csv += std::string(name) + ',' + std::to_string(k + 1) + ',' + format_double((*values)[k]) + '\n';
                write_text((std::filesystem::path(diag_plots) / "eigen_spectra.csv").string(), spec_csv);
                std::string pca_csv = "row_id,role";
                for (Eigen::Index c = 0; c < diag_dims; ++c) pca_csv += ",pc" + std::to_string(c + 1);
                pca_csv += '\n';
                for (Eigen::Index i = 0; i < data.size(); ++i) {
                    pca_csv += std::to_string(i) + ',' + to_string(data.roles[static_cast<std::size_t>(i)]);
                    for (Eigen::Index c = 0; c < diag_dims; ++c) pca_csv += ',' + format_double(pca.scores(i, c));
                    pca_csv += '\n';
                }
                write_text((std::filesystem::path(diag_plots) / "pca_scores.csv").string(), pca_csv);
            }
        } else if (*bench_cmd) {
            bench.p_values = parse_counts(bench_p, "--p-list");
            const auto sig = parse_list(bench_sigmas, "--sigmas");
            if (sig.size() != 3) throw InputError("--sigmas needs three values");
            bench.simulation.sigma_z = sig[0];
            bench.simulation.sigma_minus = sig[1];
            bench.simulation.sigma_plus = sig[2];
            bench.cost_grid = parse_cost_grid(bench_grid);
            bench.modes.clear();
            std::stringstream modes(bench_modes);
            std::string m;
            while (std::getline(modes, m, ',')) bench.modes.push_back(mode_from_string(m));
            bench.selection = selection_from_string(bench_selection);
            bench.kernel = kernel_family_from_string(bench_kernel.kernel);
            if (bench.kernel == KernelFamily::Rbf && !bench_kernel.auto_gamma()) bench.gamma = bench_kernel.fixed_gamma();
            bench.gamma_distance = bench_kernel.distance();
            bench.gamma_pairs = bench_kernel.gamma_pairs;
            bench.base_seed = g.seed;

            const ExperimentReport report = benchmark(bench);
            json doc = to_json(report);
            write_json(bench_out, doc);
            write_text(bench_csv.empty() ? sibling_csv(bench_out) : bench_csv, records_csv(report));
            if (!bench_plots.empty()) {
                ensure_dir(bench_plots);
                const std::filesystem::path dir(bench_plots);
                for (const std::string metric : {"accuracy", "sv_fraction"}) {
                    write_text((dir / (metric + "_vs_p.csv")).string(), series_csv(report, metric));
                    if (!bench_no_svg) write_text((dir / (metric + "_vs_p.svg")).string(), series_svg(report, metric));
                }
            }
            for (const auto& a : report.aggregates)
                spdlog::info("p={} {}: accuracy {:.3f}, SV fraction {:.3f}", a.p, to_string(a.mode), a.mean_accuracy, a.mean_sv_fraction);
        } else if (*rank_cmd) {
            const Dataset data = ingest_csv(rank_data, csv_options(rank_class_map));
            const FeatureRanking ranking = variance_ratio_feature_ranking(data, rank_n);
            std::string out = "rank,index,name,log_ratio,flagged\n";
            for (std::size_t r = 0; r < ranking.selected.size(); ++r) {
                const Eigen::Index c = ranking.selected[r];
                const double v = ranking.log_ratios[c];
                out += std::to_string(r + 1) + ',' + std::to_string(c) + ',' + data.feature_names[static_cast<std::size_t>(c)] + ',' +
                       (std::isnan(v) ? std::string("nan") : std::isinf(v) ? std::string("-inf") : format_double(v)) + ',' +
                       (ranking.flagged[static_cast<std::size_t>(c)] ? "true" : "false") + '\n';
            }
            write_text(rank_out, out);
            if (!rank_select_out.empty()) {
                Dataset reduced = data;
                reduced.features.resize(data.size(), static_cast<Eigen::Index>(ranking.selected.size()));
                reduced.feature_names.clear();
                for (std::size_t k = 0; k < ranking.selected.size(); ++k) {
                    reduced.features.col(static_cast<Eigen::Index>(k)) = data.features.col(ranking.selected[k]);
                    reduced.feature_names.push_back(data.feature_names[static_cast<std::size_t>(ranking.selected[k])]);
                }
                write_csv(reduced, rank_select_out);
            }
        }
        return 0;
    } catch (const ConvergenceError& e) {
        std::cerr << "apsvm: convergence error: " << e.what() << " (residual " << e.residual() << ")\n";
        return exit_code(e.kind());
    } catch (const Error& e) {
        std::cerr << "apsvm: error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "apsvm: internal error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace apsvm::cli
