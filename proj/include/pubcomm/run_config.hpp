#pragma once
// Structured run configuration: one INI-style file with a [params] section
// and per-command blocks, parsed strictly (unknown keys are errors).

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pubcomm/equilibrium.hpp"

namespace pubcomm {

struct FigureConfig {
    std::optional<double> y_min;
    std::optional<double> y_max;
    int y_points = 201;
    bool include_bounds = true;  // insert exact rows at y1 and y2
};

struct SweepConfig {
    std::optional<double> b_min;
    std::optional<double> b_max;
    int b_points = 41;
    bool explicit_grid() const { return b_min.has_value() && b_max.has_value(); }
};

struct SimulateConfig {
    std::uint64_t draws = 100000;
    std::uint32_t receivers = 1000;
    std::uint64_t seed = 1;
};

struct RunConfig {
    ModelParams params{1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.5};
    SolverConfig solver;
    FigureConfig figure;
    SweepConfig sweep;
    SimulateConfig simulate;
    std::string output_path;
    int threads = 1;
};

// Throws std::invalid_argument with a message naming the offending
// section/key for every violation.
RunConfig load_run_config(const std::string& path);

// 17-significant-digit decimal rendering; round-trips doubles exactly.
std::string fmt17(double v);

// Flat key=value result files.
std::map<std::string, std::string> read_kv_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pubcomm
