#pragma once

// Channel-spec files: a flat key = value format with [child] sections for
// mixture components. Grammar documented in docs/spec-format.md.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paulidyn/families.hpp"

namespace paulidyn {

struct ChannelSpec {
    std::string family;
    std::map<std::string, double> params;  // mu, gamma0, d, w, omega, axis, weight, a, b, c
    std::string label;
    double horizon = 10.0;
    int grid = 1000;
    std::optional<double> t_max;
    std::vector<ChannelSpec> children;  // family == "mixture" only

    bool has(const std::string& key) const { return params.count(key) != 0; }
    double get(const std::string& key) const;
    double get_or(const std::string& key, double fallback) const;
};

// Throws SpecParseError with 1-based line/column on syntax errors.
ChannelSpec parse_spec_text(const std::string& text);
ChannelSpec parse_spec_file(const std::string& path);

// A built channel plus, when the spec is an axis-aligned mixture of flip
// families, its components for synchronization analysis.
struct BuiltChannel {
    PauliChannel channel;
    std::vector<FlipChannel> components;
    std::vector<double> weights;
    bool axis_aligned = false;
    double horizon = 10.0;
    int grid = 1000;
};

// Throws SpecParseError on semantic problems (unknown family, missing or
// out-of-range parameters).
BuiltChannel build_channel(const ChannelSpec& spec);

const std::vector<std::string>& known_families();

}  // namespace paulidyn
