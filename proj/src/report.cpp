#include "occtail/report.hpp"

#include <json.hpp>

#include "occtail/render.hpp"
#include "occtail/version.hpp"

namespace occtail {

std::string to_string(ComputeMode mode) {
    switch (mode) {
    case ComputeMode::Fast: return "fast";
    case ComputeMode::Naive: return "naive";
    case ComputeMode::Exhaustive: return "exhaustive";
    case ComputeMode::MonteCarlo: return "montecarlo";
    }
    return "fast";
}

std::string report_to_json(const PValueReport& report, int indent) {
    // Every value is a string: favorable/total counts routinely exceed any
    // native numeric type, and mixed types would invite consumers to truncate.
    nlohmann::json parameters = {
        {"budget", std::to_string(report.budget)},
        {"precision", std::to_string(report.precision)},
    };
    if (report.montecarlo.has_value()) {
        const MonteCarloEstimate& mc = *report.montecarlo;
        parameters["samples"] = std::to_string(mc.samples);
        parameters["seed"] = std::to_string(mc.seed);
        char se[64];
        std::snprintf(se, sizeof(se), "%.9g", mc.standard_error);
        parameters["standard_error"] = se;
    }
    const nlohmann::json doc = {
        {"schema_version", "1"},
        {"instance",
         {{"n", std::to_string(report.instance.n)},
          {"x", std::to_string(report.instance.x)},
          {"y", std::to_string(report.instance.y)},
          {"z", std::to_string(report.instance.z)}}},
        {"mode", to_string(report.mode)},
        {"remainder_mode", to_string(report.remainder)},
        {"p_rational", report.p.to_fraction_string()},
        {"p_decimal", render_decimal(report.p, report.precision)},
        {"log10_p", render_log10(report.p)},
        {"favorable_count", report.favorable_count.get_str()},
        {"total_count", report.total_count.get_str()},
        {"provenance",
         {{"tool", kToolName}, {"version", kVersion}, {"parameters", parameters}}},
    };
    return doc.dump(indent);
}

std::string report_to_rational_line(const PValueReport& report) {
    return report.p.to_fraction_string();
}

std::string report_to_decimal_line(const PValueReport& report) {
    return render_decimal(report.p, report.precision);
}

} // namespace occtail
