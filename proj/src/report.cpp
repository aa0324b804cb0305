#include "paulidyn/report.hpp"

#include <fstream>
#include <stdexcept>

namespace paulidyn {

const char* to_string(SingularityKind kind) {
    return kind == SingularityKind::SignFlipping ? "sign-flipping" : "non-flipping";
}

namespace {

nlohmann::json indices_of(const std::array<bool, 3>& mask) {
    nlohmann::json arr = nlohmann::json::array();
    for (int axis = 1; axis <= 3; ++axis) {
        if (mask[axis - 1]) arr.push_back(axis);
    }
    return arr;
}

}  // namespace

nlohmann::json to_json(const SingularPoint& p) {
    return {{"t", p.t_star},
            {"vanishing_indices", indices_of(p.vanishing)},
            {"classification", to_string(p.classification)},
            {"left_rate_signs", p.left_signs},
            {"right_rate_signs", p.right_signs},
            {"window", p.window}};
}

nlohmann::json to_json(const SingularityReport& report) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : report.points) points.push_back(to_json(p));
    return {{"horizon", report.horizon}, {"singular_points", points}};
}

nlohmann::json to_json(const DivisibilityVerdict& verdict) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& iv : verdict.negative_rate_intervals) {
        intervals.push_back({{"t_start", iv.t_start},
                             {"t_end", iv.t_end},
                             {"rate_index", iv.rate_index},
                             {"most_negative", iv.most_negative}});
    }
    return {{"cp_divisible", verdict.cp_divisible},
            {"negative_rate_intervals", intervals}};
}

nlohmann::json to_json(const Lemma1Report& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failure_list) {
        failures.push_back(
            {{"trial", f.trial}, {"axis", f.axis}, {"t", f.t}, {"lambda", f.lambda}});
    }
    return {{"trials", report.trials},
            {"failures", report.failures},
            {"failure_list", failures},
            {"min_lambda", report.min_lambda},
            {"min_location",
             {{"trial", report.min_trial}, {"axis", report.min_axis}, {"t", report.min_time}}},
            {"strict_bound_ok", report.strict_bound_ok},
            {"worst_bound_margin", report.worst_bound_margin}};
}

nlohmann::json to_json(const SynchronizationReport& report) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : report.components) {
        comps.push_back({{"axis", c.axis}, {"singular_times", c.singular_times}});
    }
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : report.mixture_points) {
        points.push_back({{"t", p.t},
                          {"vanishing_indices", indices_of(p.vanishing)},
                          {"synchronized", p.synchronized}});
    }
    return {{"components", comps},
            {"mixture_singularities", points},
            {"all_synchronized", report.all_synchronized}};
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
}

}  // namespace paulidyn
