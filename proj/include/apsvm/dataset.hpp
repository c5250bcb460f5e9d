#pragma once

#include "apsvm/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace apsvm {

enum class Role { Normal, Neg, Pos };
enum class Split { Train, Test, Unsplit };

const char* to_string(Role role) noexcept;
const char* to_string(Split split) noexcept;

/// Samples (one per row) with their role in the anomaly-classification setup.
/// Roles map onto labels as neg -> -1, pos -> +1; normals carry no label.
struct Dataset {
    SampleMatrix features;
    std::vector<Role> roles;
    std::vector<Split> splits;
    std::vector<std::string> feature_names; ///< empty or one per column

    Eigen::Index size() const noexcept { return features.rows(); }
    Eigen::Index dim() const noexcept { return features.cols(); }
    std::size_t count(Role role) const;
    void validate() const;
};

/// Anomalous samples with +-1 labels and the dataset rows they came from.
struct LabelledSamples {
    SampleMatrix samples;
    Vector labels;
    std::vector<Eigen::Index> rows;
};

enum class SplitFilter { Training, Testing, All };

SampleMatrix select_rows(const SampleMatrix& samples, const std::vector<Eigen::Index>& rows);

/// All normal-role samples, whatever their split tag.
SampleMatrix normal_samples(const Dataset& data);

/// Training = train or unsplit rows; Testing = test rows.
LabelledSamples anomalous_samples(const Dataset& data, SplitFilter filter);

struct CsvOptions {
    std::string class_column = "class";
    std::string split_column = "split";
    /// Lower-cased file label -> role. Defaults: normal, neg, pos.
    std::map<std::string, Role> class_map = {{"normal", Role::Normal}, {"neg", Role::Neg}, {"pos", Role::Pos}};
    /// Unlabelled files (no class column) are accepted and every row gets role `unlabelled_role`.
    bool require_class = true;
    Role unlabelled_role = Role::Pos;
};

/// Parse "healthy=normal,adenoma=neg,carcinoma=pos" into a class map.
std::map<std::string, Role> parse_class_map(const std::string& spec);

/// Reads a header row, numeric feature columns, a class column and an optional split column.
Dataset ingest_csv(const std::string& path, const CsvOptions& options = {});
Dataset parse_csv(const std::string& text, const CsvOptions& options = {}, const std::string& source = "<memory>");

std::string to_csv(const Dataset& data);
void write_csv(const Dataset& data, const std::string& path);

/// FNV-1a over the raw bytes of the matrix entries.
std::uint64_t checksum(const SampleMatrix& samples);

} // namespace apsvm
