#include "apsvm/dataset.hpp"

#include "apsvm/error.hpp"
#include "apsvm/format.hpp"
#include "apsvm/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace apsvm {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Minimal RFC 4180 field splitting: quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_fields(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"') {
                if (k + 1 < line.size() && line[k + 1] == '"') {
                    current.push_back('"');
                    ++k;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (quoted) throw InputError("line " + std::to_string(line_no) + ": unterminated quoted field");
    fields.push_back(trim(current));
    return fields;
}

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

const char* to_string(Role role) noexcept {
    switch (role) {
    case Role::Normal:
        return "normal";
    case Role::Neg:
        return "neg";
    case Role::Pos:
        return "pos";
    }
    return "?";
}

const char* to_string(Split split) noexcept {
    switch (split) {
    case Split::Train:
        return "train";
    case Split::Test:
        return "test";
    case Split::Unsplit:
        return "unsplit";
    }
    return "?";
}

std::size_t Dataset::count(Role role) const { return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), role)); }

void Dataset::validate() const {
    if (features.rows() == 0) throw InputError("dataset is empty");
    if (static_cast<Eigen::Index>(roles.size()) != features.rows() || static_cast<Eigen::Index>(splits.size()) != features.rows())
        throw InputError("dataset role/split vectors do not match the sample count");
    if (!feature_names.empty() && static_cast<Eigen::Index>(feature_names.size()) != features.cols())
        throw InputError("dataset has " + std::to_string(feature_names.size()) + " feature names for " +
                         std::to_string(features.cols()) + " columns");
    if (!features.allFinite()) throw InputError("dataset has non-finite feature values");
}

SampleMatrix select_rows(const SampleMatrix& samples, const std::vector<Eigen::Index>& rows) {
    SampleMatrix out(static_cast<Eigen::Index>(rows.size()), samples.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = samples.row(rows[k]);
    return out;
}

SampleMatrix normal_samples(const Dataset& data) {
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < data.size(); ++i)
        if (data.roles[static_cast<std::size_t>(i)] == Role::Normal) rows.push_back(i);
    return select_rows(data.features, rows);
}

LabelledSamples anomalous_samples(const Dataset& data, SplitFilter filter) {
    LabelledSamples out;
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (data.roles[k] == Role::Normal) continue;
        const Split s = data.splits[k];
        const bool keep = filter == SplitFilter::All || (filter == SplitFilter::Testing ? s == Split::Test : s != Split::Test);
        if (keep) out.rows.push_back(i);
    }
    out.samples = select_rows(data.features, out.rows);
    out.labels.resize(static_cast<Eigen::Index>(out.rows.size()));
    for (std::size_t k = 0; k < out.rows.size(); ++k)
        out.labels[static_cast<Eigen::Index>(k)] = data.roles[static_cast<std::size_t>(out.rows[k])] == Role::Pos ? 1.0 : -1.0;
    return out;
}

std::map<std::string, Role> parse_class_map(const std::string& spec) {
    std::map<std::string, Role> map;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("class map entry '" + item + "' is not label=role");
        const std::string label = lower(trim(item.substr(0, eq)));
        const std::string role = lower(trim(item.substr(eq + 1)));
        Role r;
        if (role == "normal")
            r = Role::Normal;
        else if (role == "neg")
            r = Role::Neg;
        else if (role == "pos")
            r = Role::Pos;
        else
            throw InputError("class map role '" + role + "' is not one of normal, neg, pos");
        if (label.empty()) throw InputError("class map entry '" + item + "' has an empty label");
        map[label] = r;
    }
    if (map.empty()) throw InputError("class map is empty");
    return map;
}

Dataset parse_csv(const std::string& text, const CsvOptions& options, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            header = split_fields(line, line_no);
            break;
        }
    }
    if (header.empty()) throw InputError(source + ": empty file (no header row)");
    if (line_no == 1 && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);

    const std::string class_key = lower(options.class_column);
    const std::string split_key = lower(options.split_column);
    long class_col = -1;
    long split_col = -1;
    std::vector<std::size_t> feature_cols;
    Dataset data;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string key = lower(header[c]);
        if (key == class_key) {
            if (class_col >= 0) throw InputError(source + ": duplicate class column");
            class_col = static_cast<long>(c);
        } else if (key == split_key) {
            if (split_col >= 0) throw InputError(source + ": duplicate split column");
            split_col = static_cast<long>(c);
        } else {
            feature_cols.push_back(c);
            data.feature_names.push_back(header[c]);
        }
    }
    if (class_col < 0 && options.require_class)
        throw InputError(source + ": missing class column '" + options.class_column + "'");
    if (feature_cols.empty()) throw InputError(source + ": no feature columns");

    std::vector<double> values;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line, line_no);
        if (fields.size() != header.size())
            throw InputError(source + ": line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                             " columns, header has " + std::to_string(header.size()));
        for (std::size_t c : feature_cols) {
            double v = 0.0;
            if (!parse_double(fields[c], v))
                throw InputError(source + ": line " + std::to_string(line_no) + " (data row " + std::to_string(row + 1) +
                                 "), column '" + header[c] + "': '" + fields[c] + "' is not a finite number");
            values.push_back(v);
        }
        if (class_col >= 0) {
            const std::string label = lower(fields[static_cast<std::size_t>(class_col)]);
            const auto it = options.class_map.find(label);
            if (it == options.class_map.end())
                throw InputError(source + ": line " + std::to_string(line_no) + ": unknown class '" +
                                 fields[static_cast<std::size_t>(class_col)] + "'");
            data.roles.push_back(it->second);
        } else {
            data.roles.push_back(options.unlabelled_role);
        }
        if (split_col >= 0) {
            const std::string tag = lower(fields[static_cast<std::size_t>(split_col)]);
            if (tag == "train")
                data.splits.push_back(Split::Train);
            else if (tag == "test")
                data.splits.push_back(Split::Test);
            else if (tag.empty() || tag == "unsplit")
                data.splits.push_back(Split::Unsplit);
            else
                throw InputError(source + ": line " + std::to_string(line_no) + ": split must be train or test, got '" +
                                 fields[static_cast<std::size_t>(split_col)] + "'");
        } else {
            data.splits.push_back(Split::Unsplit);
        }
        ++row;
    }
    if (row == 0) throw InputError(source + ": empty dataset (header only)");

    const auto p = static_cast<Eigen::Index>(feature_cols.size());
    data.features = Eigen::Map<const SampleMatrix>(values.data(), static_cast<Eigen::Index>(row), p);
    return data;
}

Dataset ingest_csv(const std::string& path, const CsvOptions& options) {
    return parse_csv(read_text(path), options, path);
}

std::string to_csv(const Dataset& data) {
    data.validate();
    std::string out;
    for (Eigen::Index c = 0; c < data.dim(); ++c) {
        out += data.feature_names.empty() ? "f" + std::to_string(c) : quote_if_needed(data.feature_names[static_cast<std::size_t>(c)]);
        out += ',';
    }
    out += "class,split\n";
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        for (Eigen::Index c = 0; c < data.dim(); ++c) {
            out += format_double(data.features(i, c));
            out += ',';
        }
        out += to_string(data.roles[static_cast<std::size_t>(i)]);
        out += ',';
        const Split s = data.splits[static_cast<std::size_t>(i)];
        if (s != Split::Unsplit) out += to_string(s);
        out += '\n';
    }
    return out;
}

void write_csv(const Dataset& data, const std::string& path) {
    write_text(path, to_csv(data));
}

std::uint64_t checksum(const SampleMatrix& samples) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto* bytes = reinterpret_cast<const unsigned char*>(samples.data());
    const std::size_t len = static_cast<std::size_t>(samples.size()) * sizeof(double);
    for (std::size_t k = 0; k < len; ++k) {
        h ^= bytes[k];
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace apsvm
