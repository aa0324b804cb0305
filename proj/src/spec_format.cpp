#include "paulidyn/spec_format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace paulidyn {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_number_key(const std::string& key) {
    static const std::vector<std::string> keys = {"mu",   "nu", "gamma0", "d",      "w",
                                                  "omega", "axis", "weight", "a",  "b",
                                                  "c",     "horizon", "grid", "t_max"};
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

[[noreturn]] void fail(const std::string& what, int line, int column) {
    throw SpecParseError("spec:" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what,
                         line, column);
}

void assign(ChannelSpec& spec, const std::string& key, const std::string& value,
            int line, int col_value) {
    if (key == "family") {
        spec.family = value;
        return;
    }
    if (key == "label") {
        spec.label = value;
        return;
    }
    if (!is_number_key(key)) fail("unknown key '" + key + "'", line, 1);
    std::size_t consumed = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &consumed);
    } catch (const std::exception&) {
        fail("expected a number for '" + key + "', got '" + value + "'", line, col_value);
    }
    if (consumed != value.size()) {
        fail("trailing characters after number for '" + key + "'", line,
             col_value + static_cast<int>(consumed));
    }
    if (key == "horizon") {
        spec.horizon = parsed;
    } else if (key == "grid") {
        spec.grid = static_cast<int>(parsed);
    } else if (key == "t_max") {
        spec.t_max = parsed;
    } else {
        spec.params[key] = parsed;
    }
}

}  // namespace

double ChannelSpec::get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) {
        throw SpecParseError("spec: missing required parameter '" + key + "' for family '" +
                                 family + "'",
                             0, 0);
    }
    return it->second;
}

double ChannelSpec::get_or(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

ChannelSpec parse_spec_text(const std::string& text) {
    ChannelSpec root;
    ChannelSpec* current = &root;
    bool in_child = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line == "[child]") {
                if (in_child && root.family != "mixture") {
                    fail("[child] sections require family = mixture", line_no, 1);
                }
                root.children.emplace_back();
                current = &root.children.back();
                in_child = true;
                continue;
            }
            fail("unknown section '" + line + "'", line_no, 1);
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail("expected 'key = value'", line_no, 1);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key", line_no, 1);
        if (value.empty()) fail("empty value for '" + key + "'", line_no,
                                static_cast<int>(eq) + 2);
        if (in_child && (key == "horizon" || key == "grid" || key == "t_max")) {
            fail("'" + key + "' belongs to the top level, not a [child]", line_no, 1);
        }
        assign(*current, key, value, line_no, static_cast<int>(eq) + 2);
    }

    if (root.family.empty()) fail("missing 'family' key", std::max(line_no, 1), 1);
    if (!root.children.empty() && root.family != "mixture") {
        fail("[child] sections require family = mixture", 1, 1);
    }
    return root;
}

ChannelSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SpecParseError("spec: cannot open '" + path + "'", 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> families = {
        "cosine_flip",       "semigroup_flip",     "rtn_flip", "isotropic_rtn",
        "rate_dephasing_tan", "rate_dephasing_tan2", "mixture"};
    return families;
}

namespace {

int axis_of(const ChannelSpec& spec, int fallback) {
    const double a = spec.get_or("axis", fallback);
    const int axis = static_cast<int>(a);
    if (axis < 1 || axis > 3 || axis != a) {
        throw SpecParseError("spec: axis must be 1, 2 or 3", 0, 0);
    }
    return axis;
}

FlipChannel build_flip(const ChannelSpec& spec, double t_max) {
    if (spec.family == "cosine_flip") {
        return cosine_flip(axis_of(spec, 1), spec.get("mu"), t_max);
    }
    if (spec.family == "semigroup_flip") {
        return semigroup_flip(axis_of(spec, 1), spec.get("gamma0"), t_max);
    }
    if (spec.family == "rtn_flip") {
        return rtn_flip(axis_of(spec, 1), RTNParams{spec.get("d"), spec.get("w")}, t_max);
    }
    throw SpecParseError("spec: family '" + spec.family + "' is not a flip family", 0, 0);
}

bool is_flip_family(const std::string& family) {
    return family == "cosine_flip" || family == "semigroup_flip" || family == "rtn_flip";
}

}  // namespace

BuiltChannel build_channel(const ChannelSpec& spec) {
    const double horizon = spec.horizon;
    if (!(horizon > 0.0)) throw SpecParseError("spec: horizon must be positive", 0, 0);
    if (spec.grid < 2) throw SpecParseError("spec: grid must be at least 2", 0, 0);
    const double t_max =
        spec.t_max.value_or(std::max(kDefaultFamilyHorizon, 1.5 * horizon));
    if (horizon > t_max) {
        throw OutOfDomainError("spec: horizon exceeds t_max");
    }

    const std::string& fam = spec.family;
    if (std::find(known_families().begin(), known_families().end(), fam) ==
        known_families().end()) {
        throw SpecParseError("spec: unknown family '" + fam + "'", 0, 0);
    }

    BuiltChannel out{identity_channel(t_max), {}, {}, false, horizon, spec.grid};

    if (is_flip_family(fam)) {
        FlipChannel flip = build_flip(spec, t_max);
        out.channel = flip.channel;
        out.components.push_back(std::move(flip));
        out.weights = {1.0};
        out.axis_aligned = true;
        return out;
    }
    if (fam == "isotropic_rtn") {
        const MixtureWeights w{spec.get_or("a", 1.0 / 3.0), spec.get_or("b", 1.0 / 3.0),
                               spec.get_or("c", 1.0 / 3.0)};
        const RTNParams p{spec.get("d"), spec.get("w")};
        out.channel = isotropic_rtn(p, w, t_max);
        for (int axis = 1; axis <= 3; ++axis) out.components.push_back(rtn_flip(axis, p, t_max));
        out.weights = {w.a, w.b, w.c};
        out.axis_aligned = true;
        return out;
    }
    if (fam == "rate_dephasing_tan") {
        out.channel = tan_rate_dephasing(spec.get_or("omega", 1.0), axis_of(spec, 3), t_max);
        return out;
    }
    if (fam == "rate_dephasing_tan2") {
        out.channel = tan2_rate_dephasing(spec.get_or("omega", 1.0), axis_of(spec, 3), t_max);
        return out;
    }

    // mixture
    if (spec.children.empty()) {
        throw SpecParseError("spec: mixture needs at least one [child]", 0, 0);
    }
    std::vector<double> weights;
    bool all_flips = true;
    for (const auto& child : spec.children) {
        if (child.family == "mixture") {
            throw SpecParseError("spec: nested mixtures are not supported", 0, 0);
        }
        weights.push_back(child.get("weight"));
        all_flips = all_flips && is_flip_family(child.family);
    }
    std::array<bool, 4> axis_used = {false, false, false, false};
    bool distinct_axes = all_flips;
    if (all_flips) {
        for (const auto& child : spec.children) {
            const int axis = axis_of(child, 1);
            if (axis_used[axis]) distinct_axes = false;
            axis_used[axis] = true;
        }
    }

    if (all_flips && distinct_axes) {
        for (const auto& child : spec.children) {
            out.components.push_back(build_flip(child, t_max));
        }
        out.channel = axis_mixture(out.components, weights,
                                   spec.label.empty() ? "mixture" : spec.label);
        out.axis_aligned = true;
    } else {
        std::vector<PauliChannel> channels;
        for (const auto& child : spec.children) {
            ChannelSpec leaf = child;
            leaf.horizon = horizon;
            leaf.t_max = t_max;
            channels.push_back(build_channel(leaf).channel);
        }
        out.channel = mix(channels, weights, spec.label.empty() ? "mixture" : spec.label);
    }
    out.weights = std::move(weights);
    return out;
}

}  // namespace paulidyn
