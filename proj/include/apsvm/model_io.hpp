#pragma once

#include "apsvm/solver.hpp"

#include "json.hpp"

#include <string>

namespace apsvm {

inline constexpr const char* kModelSchemaVersion = "apsvm.model/1";

/// Everything needed to rebuild the model: kernel, dual weights, bias, the
/// anomalous training samples and, for AntiProfile, the normal samples and the
/// ridge / eigenvalue tolerance of the context. Reals are written in shortest
/// round-trip form, so load(save(m)) reproduces every double exactly.
nlohmann::ordered_json model_to_json(const TrainedModel& model);

/// Validates the schema version and sample checksums.
TrainedModel model_from_json(const nlohmann::ordered_json& doc);

void save_model(const TrainedModel& model, const std::string& path, const nlohmann::ordered_json& provenance = {});
TrainedModel load_model(const std::string& path);

/// Combined FNV-1a checksum of the training (and normal) samples, hex encoded.
std::string training_checksum(const TrainedModel& model);

} // namespace apsvm
