#include "apsvm/model_io.hpp"

#include "apsvm/dataset.hpp"
#include "apsvm/error.hpp"
#include "apsvm/random.hpp"
#include "apsvm/text_io.hpp"

#include <cstdio>
#include <fstream>

namespace apsvm {

using json = nlohmann::ordered_json;

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json matrix_rows(const SampleMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_array(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

SampleMatrix rows_matrix(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty()) throw InputError(std::string("model: '") + what + "' must be a nonempty array of rows");
    const std::size_t p = rows[0].size();
    SampleMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != p) throw InputError(std::string("model: ragged rows in '") + what + "'");
        for (std::size_t c = 0; c < p; ++c)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c].get<double>();
    }
    return m;
}

Vector array_vector(const json& a, const char* what) {
    if (!a.is_array()) throw InputError(std::string("model: '") + what + "' must be an array");
    Vector v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
    return v;
}

} // namespace

std::string training_checksum(const TrainedModel& model) {
    std::uint64_t h = checksum(model.training_samples());
    if (model.context()) h ^= mix64(checksum(model.context()->normals()));
    return hex64(h);
}

json model_to_json(const TrainedModel& model) {
    json doc;
    doc["schema_version"] = kModelSchemaVersion;
    doc["toolkit_version"] = APSVM_VERSION;
    doc["mode"] = to_string(model.mode());
    json kernel;
    kernel["family"] = to_string(model.spec().family());
    if (model.spec().family() == KernelFamily::Rbf) kernel["gamma"] = model.spec().gamma();
    doc["kernel"] = kernel;
    doc["cost"] = model.cost();
    doc["lambda"] = model.lambda();
    doc["bias"] = model.bias();
    doc["alphas"] = vector_array(model.alpha());
    json support = json::array();
    for (Eigen::Index i : model.support_indices()) support.push_back(i);
    doc["support_indices"] = support;
    doc["normal_coefficients"] = model.mode() == Mode::AntiProfile ? vector_array(model.normal_coefficients()) : json(nullptr);
    json training;
    training["samples"] = matrix_rows(model.training_samples());
    training["labels"] = vector_array(model.labels());
    doc["training"] = training;
    if (model.context()) {
        json normals;
        normals["samples"] = matrix_rows(model.context()->normals());
        normals["ridge"] = model.context()->ridge();
        normals["eig_tolerance"] = model.context()->eig_tolerance();
        doc["normals"] = normals;
    } else {
        doc["normals"] = nullptr;
    }
    doc["training_sample_checksum"] = training_checksum(model);
    return doc;
}

TrainedModel model_from_json(const json& doc) {
    try {
        if (doc.value("schema_version", std::string()) != kModelSchemaVersion)
            throw InputError("model: unsupported schema_version (expected " + std::string(kModelSchemaVersion) + ")");
        const Mode mode = mode_from_string(doc.at("mode").get<std::string>());
        const json& kernel = doc.at("kernel");
        const KernelFamily family = kernel_family_from_string(kernel.at("family").get<std::string>());
        const KernelSpec spec = family == KernelFamily::Rbf ? KernelSpec::rbf(kernel.at("gamma").get<double>()) : KernelSpec::linear();
        SampleMatrix samples = rows_matrix(doc.at("training").at("samples"), "training.samples");
        Vector labels = array_vector(doc.at("training").at("labels"), "training.labels");
        Vector alpha = array_vector(doc.at("alphas"), "alphas");
        std::optional<IndirectKernelContext> context;
        std::optional<Vector> coefficients;
        if (mode == Mode::AntiProfile) {
            const json& normals = doc.at("normals");
            context = build_context(rows_matrix(normals.at("samples"), "normals.samples"), spec, normals.at("ridge").get<double>(),
                                    normals.at("eig_tolerance").get<double>());
            coefficients = array_vector(doc.at("normal_coefficients"), "normal_coefficients");
        }
        TrainedModel model(mode, spec, doc.at("cost").get<double>(), std::move(samples), std::move(labels), std::move(alpha),
                           doc.at("bias").get<double>(), std::move(context), std::move(coefficients));
        if (training_checksum(model) != doc.at("training_sample_checksum").get<std::string>())
            throw InputError("model: training-sample checksum mismatch");
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("model: malformed document: ") + e.what());
    }
}

void save_model(const TrainedModel& model, const std::string& path, const json& provenance) {
    json doc = model_to_json(model);
    if (!provenance.is_null()) doc["provenance"] = provenance;
    write_text(path, doc.dump(2) + '\n');
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open model '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("model '" + path + "' is not valid JSON: " + e.what());
    }
    return model_from_json(doc);
}

} // namespace apsvm
