#pragma once

// CLI11 config formatter reading JSON documents. Top-level keys are global
// options; an object keyed by a subcommand name holds that subcommand's options:
//   {"seed": 7, "benchmark": {"repeats": 3, "p-list": "10,50"}}

#include "CLI11.hpp"
#include "json.hpp"

#include <sstream>

namespace apsvm::cli {

class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
        nlohmann::ordered_json j;
        for (const CLI::Option* opt : app->get_options({})) {
            if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
            const std::string name = opt->get_lnames()[0];
            if (opt->count() > 0)
                j[name] = opt->as<std::string>();
            else if (default_also && !opt->get_default_str().empty())
                j[name] = opt->get_default_str();
        }
        for (const CLI::App* sub : app->get_subcommands({})) {
            if (sub->count() == 0) continue;
            j[sub->get_name()] = nlohmann::ordered_json::parse(to_config(sub, default_also, false, ""));
        }
        return j.dump(2);
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
        return flatten(j, "", {});
    }

private:
    static std::vector<CLI::ConfigItem> flatten(const nlohmann::json& j, const std::string& name, std::vector<std::string> prefix) {
        std::vector<CLI::ConfigItem> items;
        if (j.is_object()) {
            if (!name.empty()) prefix.push_back(name);
            for (auto it = j.begin(); it != j.end(); ++it) {
                auto sub = flatten(*it, it.key(), prefix);
                items.insert(items.end(), sub.begin(), sub.end());
            }
            return items;
        }
        CLI::ConfigItem item;
        item.name = name;
        item.parents = prefix;
        if (j.is_boolean())
            item.inputs = {j.get<bool>() ? "true" : "false"};
        else if (j.is_number())
            item.inputs = {j.dump()};
        else if (j.is_string())
            item.inputs = {j.get<std::string>()};
        else if (j.is_array())
            for (const auto& v : j) item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        else
            throw CLI::ConversionError("config key '" + name + "' has an unsupported value");
        items.push_back(std::move(item));
        return items;
    }
};

} // namespace apsvm::cli
