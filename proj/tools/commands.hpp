#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace dynalg::cli {

enum class Format { json, csv, text };

struct RunConfig {
    std::string command;
    int n_max = 14;
    double tol = 1e-10;
    Format format = Format::json;
    std::string out;
    std::uint64_t seed = 1;
    bool parallel = false;

    // command-specific
    int rows = 4;
    std::string system = "both";
    int dim = 0;  // 0: per-system default
    int levels = 10;
    std::size_t samples = 1000;
};

struct Check {
    std::string name;
    bool ok = false;
    nlohmann::json detail;
};

struct CommandResult {
    std::string command;
    std::vector<Check> checks;
    std::string csv;  // command-native table, if any
    nlohmann::json data;

    [[nodiscard]] bool ok() const;
};

const std::vector<std::string>& command_names();

/// Throws InputError on invalid configuration.
std::vector<CommandResult> run(const RunConfig& cfg);

std::string render(const RunConfig& cfg, const std::vector<CommandResult>& results);

}  // namespace dynalg::cli
