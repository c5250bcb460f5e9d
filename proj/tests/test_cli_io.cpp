#include "doctest.h"
#include "helpers.hpp"

#include "cli.hpp"

#include "apsvm/dataset.hpp"
#include "apsvm/error.hpp"
#include "apsvm/experiments.hpp"
#include "apsvm/format.hpp"
#include "apsvm/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace apsvm;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::current_path() / "cli_io_scratch" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

} // namespace

TEST_CASE("format_double round-trips exactly") {
    Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        const double v = rng.normal() * std::pow(10.0, static_cast<double>(rng.below(40)) - 20.0);
        double back = 0.0;
        REQUIRE(parse_double(format_double(v), back));
        CHECK(std::memcmp(&v, &back, sizeof v) == 0);
    }
    for (double v : {0.0, -0.0, 1e-308, 4.9e-324, std::numeric_limits<double>::max(), 0.1, 1.0 / 3.0}) {
        double back = 1.0;
        REQUIRE(parse_double(format_double(v), back));
        CHECK(std::memcmp(&v, &back, sizeof v) == 0);
    }
    double out = 0.0;
    CHECK(!parse_double("NaN", out));
    CHECK(!parse_double("inf", out));
    CHECK(!parse_double("1.5x", out));
    CHECK(!parse_double("", out));
    CHECK(parse_double(" +2.5 ", out));
    CHECK(out == 2.5);
}

TEST_CASE("CSV ingestion basics") {
    const auto d = parse_csv("f0,class\n1.5,normal\n2,NEG\n-3,pos\n");
    CHECK(d.count(Role::Normal) == 1);
    CHECK(d.count(Role::Neg) == 1);
    CHECK(d.count(Role::Pos) == 1);
    CHECK(d.dim() == 1);
    CHECK(d.features(2, 0) == -3.0);
    CHECK(d.splits[0] == Split::Unsplit);

    const auto s = parse_csv("a,b,class,split\n1,2,neg,train\n3,4,pos,test\n5,6,normal,\n");
    CHECK(s.splits[0] == Split::Train);
    CHECK(s.splits[1] == Split::Test);
    CHECK(s.splits[2] == Split::Unsplit);
    CHECK(s.feature_names == std::vector<std::string>{"a", "b"});

    CsvOptions custom;
    custom.class_map = parse_class_map("healthy=normal,adenoma=neg,carcinoma=pos");
    const auto c = parse_csv("x,class\n1,Healthy\n2,adenoma\n3,CARCINOMA\n", custom);
    CHECK(c.roles == std::vector<Role>{Role::Normal, Role::Neg, Role::Pos});
}

TEST_CASE("CSV ingestion errors are distinct and located") {
    auto message = [](const std::string& text) {
        try {
            parse_csv(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const auto nan = message("f0,f1,class\n1,2,neg\n3,NaN,pos\n");
    CHECK(nan.find("row 2") != std::string::npos);
    CHECK(nan.find("f1") != std::string::npos);
    CHECK(message("f0,f1\n1,2\n").find("class") != std::string::npos);
    CHECK(message("f0,class\n").find("empty") != std::string::npos);
    CHECK(message("").find("empty") != std::string::npos);
    CHECK(message("f0,f1,class\n1,2,neg\n3,pos\n").find("column") != std::string::npos);
    CHECK(message("f0,class\n1,unknown\n").find("unknown") != std::string::npos);
    CHECK(message("f0,class\n1,neg\n") != message("f0,f1\n1,2\n"));
    CHECK_THROWS_AS(ingest_csv("/nonexistent/path.csv"), InputError);
}

TEST_CASE("CSV round-trip is bitwise exact") {
    SimulationConfig sim;
    sim.p = 37;
    sim.seed = 11;
    const auto d = simulate(sim);
    const auto back = parse_csv(to_csv(d));
    REQUIRE(back.features.rows() == d.features.rows());
    REQUIRE(back.features.cols() == d.features.cols());
    CHECK(std::memcmp(back.features.data(), d.features.data(), sizeof(double) * static_cast<std::size_t>(d.features.size())) == 0);
    CHECK(back.roles == d.roles);
    CHECK(back.splits == d.splits);
    CHECK(to_csv(back) == to_csv(d));
    CHECK(checksum(back.features) == checksum(d.features));
}

TEST_CASE("model JSON round-trip reproduces predictions exactly") {
    SimulationConfig sim;
    sim.p = 15;
    sim.seed = 5;
    const auto d = simulate(sim);
    const auto tr = anomalous_samples(d, SplitFilter::Training);
    const auto normals = normal_samples(d);
    const auto dir = scratch("model_roundtrip");
    for (Mode mode : {Mode::Standard, Mode::AntiProfile}) {
        const auto spec = mode == Mode::Standard ? KernelSpec::linear() : KernelSpec::rbf(1.0 / 85.0);
        const auto model = train(tr.samples, tr.labels, &normals, spec, mode, 0.5);
        const auto path = (dir / (std::string(to_string(mode)) + ".json")).string();
        save_model(model, path, {{"note", "test"}});
        const auto back = load_model(path);
        CHECK(back.mode() == model.mode());
        CHECK(back.spec() == model.spec());
        CHECK(back.bias() == model.bias());
        CHECK(back.alpha() == model.alpha());
        CHECK(back.normal_coefficients() == model.normal_coefficients());
        const auto test = anomalous_samples(d, SplitFilter::Testing);
        for (Eigen::Index i = 0; i < test.samples.rows(); ++i) {
            const double a = model.decision_value(row_view(test.samples, i));
            const double b = back.decision_value(row_view(test.samples, i));
            CHECK(std::memcmp(&a, &b, sizeof a) == 0);
        }
        CHECK(accuracy(back, test) == accuracy(model, test));

        // Saving again yields the same bytes.
        const auto path2 = (dir / "again.json").string();
        save_model(back, path2, {{"note", "test"}});
        CHECK(slurp(path) == slurp(path2));

        // A tampered sample fails the checksum.
        auto doc = nlohmann::ordered_json::parse(slurp(path));
        doc["training"]["samples"][0][0] = 123.0;
        CHECK_THROWS_AS(model_from_json(doc), InputError);
        auto wrong = nlohmann::ordered_json::parse(slurp(path));
        wrong["schema_version"] = "apsvm.model/999";
        CHECK_THROWS_AS(model_from_json(wrong), InputError);
    }
}

TEST_CASE("CLI pipeline: simulate, train, predict") {
    const auto dir = scratch("pipeline");
    const auto data = (dir / "data.csv").string();
    const auto model = (dir / "model.json").string();
    const auto preds = (dir / "pred.csv").string();
    REQUIRE(cli::run({"simulate", "--p", "20", "--sigmas", "1,2,4", "--seed", "7", "--out", data}) == 0);
    REQUIRE(cli::run({"--seed", "7", "train", "--data", data, "--kernel", "rbf", "--gamma", "auto", "--mode", "antiprofile",
                      "--cost-grid", "pow2:-4:4", "--out", model}) == 0);
    REQUIRE(cli::run({"predict", "--model", model, "--data", data, "--out", preds}) == 0);
    const auto text = slurp(preds);
    CHECK(line_count(text) == 11);
    CHECK(text.rfind("row_id,decision_value,label\n", 0) == 0);

    // gamma recorded in the model equals the heuristic on the same seed.
    const auto dataset = ingest_csv(data);
    Rng rng(7);
    const double expected = rbf_gamma_heuristic(normal_samples(dataset), anomalous_samples(dataset, SplitFilter::Training).samples, 5, rng);
    const auto doc = nlohmann::ordered_json::parse(slurp(model));
    CHECK(doc["kernel"]["gamma"].get<double>() == expected);
    CHECK(doc["provenance"]["seed"].get<std::uint64_t>() == 7);

    // Every selection accuracy is recomputable from the serialized model and test split.
    const auto loaded = load_model(model);
    CHECK(accuracy(loaded, anomalous_samples(dataset, SplitFilter::Testing)) ==
          doc["provenance"]["selection"]["test_accuracy"].get<double>());
}

TEST_CASE("CLI exit codes") {
    const auto dir = scratch("exit_codes");
    CHECK(cli::run({"train", "--data", (dir / "missing.csv").string(), "--cost", "1", "--out", (dir / "m.json").string()}) == 2);
    CHECK(cli::run({"simulate", "--p", "0", "--out", (dir / "d.csv").string()}) == 2);
    CHECK(cli::run({"simulate", "--p", "3", "--sigmas", "1,-2,4", "--out", (dir / "d.csv").string()}) == 2);
    CHECK(cli::run({"bogus-command"}) == 2);
    CHECK(cli::run({}) == 2);
    CHECK(cli::run({"--version"}) == 0);

    // Singular kernel data: every anomalous point identical -> degenerate gamma heuristic.
    std::ofstream(dir / "flat.csv") << "f0,class\n0,normal\n0,normal\n0,normal\n0,normal\n0,normal\n"
                                       "0,neg\n0,neg\n0,neg\n0,neg\n0,neg\n0,pos\n0,pos\n0,pos\n0,pos\n0,pos\n";
    CHECK(cli::run({"train", "--data", (dir / "flat.csv").string(), "--cost", "1", "--out", (dir / "m.json").string()}) == 2);

    // Non-convergence maps to 3.
    REQUIRE(cli::run({"simulate", "--p", "10", "--seed", "2", "--out", (dir / "d.csv").string()}) == 0);
    CHECK(cli::run({"train", "--data", (dir / "d.csv").string(), "--kernel", "rbf", "--gamma", "0.05", "--cost", "100",
                    "--max-iter", "1", "--out", (dir / "m.json").string()}) == 3);
}

TEST_CASE("CLI diagnose, benchmark and rank-features produce artifacts") {
    const auto dir = scratch("artifacts");
    const auto data = (dir / "data.csv").string();
    REQUIRE(cli::run({"simulate", "--p", "30", "--seed", "3", "--out", data}) == 0);

    REQUIRE(cli::run({"diagnose", "--data", data, "--m", "5", "--draws", "20", "--out", (dir / "diag.json").string(),
                      "--plots-dir", (dir / "plots").string()}) == 0);
    const auto diag = nlohmann::ordered_json::parse(slurp(dir / "diag.json"));
    CHECK(diag["schema_version"] == "apsvm.diagnose/1");
    CHECK(diag["heterogeneity"]["normal_vs_pos"]["mean_log_det_ratio"].get<double>() < 0.0);
    CHECK(fs::exists(dir / "plots" / "eigen_spectra.csv"));
    CHECK(fs::exists(dir / "plots" / "pca_scores.csv"));

    const auto report = (dir / "bench.json").string();
    REQUIRE(cli::run({"--seed", "9", "benchmark", "--p-list", "10,20", "--repeats", "2", "--cost-grid", "pow2:-2:2", "--out",
                      report, "--plots-dir", (dir / "plots").string()}) == 0);
    const auto bench = nlohmann::ordered_json::parse(slurp(report));
    CHECK(bench["schema_version"] == "apsvm.benchmark/1");
    CHECK(bench["records"].size() == 8);
    CHECK(fs::exists(dir / "bench.csv"));
    CHECK(fs::exists(dir / "plots" / "accuracy_vs_p.csv"));
    CHECK(fs::exists(dir / "plots" / "sv_fraction_vs_p.svg"));

    // Same invocation again -> byte-identical JSON and CSV.
    const auto first_json = slurp(report);
    const auto first_csv = slurp(dir / "bench.csv");
    REQUIRE(cli::run({"--seed", "9", "benchmark", "--p-list", "10,20", "--repeats", "2", "--cost-grid", "pow2:-2:2", "--out",
                      report, "--plots-dir", (dir / "plots").string()}) == 0);
    CHECK(slurp(report) == first_json);
    CHECK(slurp(dir / "bench.csv") == first_csv);

    const auto ranks = (dir / "ranks.csv").string();
    REQUIRE(cli::run({"rank-features", "--data", data, "--n-features", "4", "--out", ranks}) == 0);
    const auto text = slurp(ranks);
    CHECK(line_count(text) == 5);
    CHECK(text.rfind("rank,index,name,log_ratio,flagged\n", 0) == 0);
}

TEST_CASE("JSON config file with CLI precedence") {
    const auto dir = scratch("config");
    std::ofstream(dir / "cfg.json") << R"({"seed": 5, "simulate": {"p": 3, "n-normals": 4}})";
    const auto out = (dir / "d.csv").string();
    REQUIRE(cli::run({"--config", (dir / "cfg.json").string(), "simulate", "--p", "4", "--out", out}) == 0);
    const auto d = ingest_csv(out);
    CHECK(d.dim() == 4);
    CHECK(d.count(Role::Normal) == 4);

    std::ofstream(dir / "bad.json") << R"({"simulate": {"bogus": 1}})";
    CHECK(cli::run({"--config", (dir / "bad.json").string(), "simulate", "--out", out}) == 2);
}
