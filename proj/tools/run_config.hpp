#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyspec/group.hpp"
#include "polyspec/orbit.hpp"
#include "polyspec/root_system.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

inline constexpr int kConfigSchemaVersion = 1;

struct RootSystemConfig {
    std::string preset = "a2";
    double multiplicity = 1.0;        // a2
    int n = 5;                        // b2
    std::vector<double> rhos = {0.5, 0.5};  // product
};

struct GeneratorsConfig {
    bool present = false;
    std::string realization = "sln";
    std::vector<polyspec::GroupElement> generators;
    bool include_inverses = true;
    int max_word_length = 8;
    std::size_t element_cap = polyspec::kDefaultElementCap;
};

struct WindowConfig {
    double lo = 0.0;
    double hi = 0.0;
};

struct AnalysisConfig {
    std::vector<std::string> mu = {"rho"};
    std::string basis = "std";
    std::string mode = "plain";
    double aperture = 0.1;
    int direction_grid = 16;
    std::optional<WindowConfig> window;
    double window_fraction = 0.6;
    double metric_scale = 1.0;
    double margin = 0.05;
};

struct OutputConfig {
    std::string dir = ".";
    bool json = true;
    bool csv = true;
    bool text = true;
    bool timestamp = true;
};

struct RunConfig {
    RootSystemConfig root_system;
    GeneratorsConfig generators;
    AnalysisConfig analysis;
    OutputConfig output;
};

// Strict config ingestion: unknown keys anywhere, wrong types, and
// out-of-range enum strings are all schema errors carrying a dotted path.
// The file must declare schema_version = 1.
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const Json& j);

struct BuiltPreset {
    polyspec::RootSystem rs;
    std::optional<std::string> warning;
};

BuiltPreset build_preset(const RootSystemConfig& c);

// "rho", "a<k>" for the k-th positive root, or comma-separated coordinates.
// Coordinate entries may be rational literals (parsed exactly) or decimals.
polyspec::Functional parse_functional(const polyspec::RootSystem& rs, const std::string& text,
                                      const std::string& basis);

// One scalar from a rational literal or a decimal string.
double parse_scalar(const std::string& text);

// Split on `sep`, trimming surrounding whitespace from each piece.
std::vector<std::string> split_list(const std::string& text, char sep);

// Inline matrix syntax for flags: rows ';'-separated, entries ','-separated,
// product factors '|'-separated. The element stays exact when every entry is
// a rational literal.
polyspec::GroupElement parse_matrix_arg(const std::string& realization, const std::string& text);

// Matrix generator from config JSON. Entries may be integers or rational
// strings (exact) or floating numbers (inexact).
polyspec::GroupElement parse_matrix_json(const std::string& realization, const Json& j,
                                         const std::string& path);

}  // namespace cli
