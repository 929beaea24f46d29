#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "occtail/bigint.hpp"
#include "occtail/instance.hpp"
#include "occtail/oracles.hpp"
#include "occtail/rational.hpp"

namespace occtail {

/// How a p-value was produced.
enum class ComputeMode {
    Fast,
    Naive,
    Exhaustive,
    MonteCarlo,
};

std::string to_string(ComputeMode mode);

/// One p-value answer plus enough provenance to reproduce it. The decimal and
/// log10 fields are renderings of the rational, never separately computed.
/// favorable_count / total_count reduces to p.
struct PValueReport {
    ProblemInstance instance;
    ComputeMode mode = ComputeMode::Fast;
    RemainderPoolMode remainder = RemainderPoolMode::Corrected;
    ExactRational p;
    BigInt favorable_count;
    BigInt total_count;
    int precision = 15;
    std::uint64_t budget = EnumerationBudget{}.limit;
    std::optional<MonteCarloEstimate> montecarlo; // set for ComputeMode::MonteCarlo
};

/// JSON object with every value as a string (arbitrary-precision numbers must
/// survive any consumer). Key set is schema-stable; bump schema_version before
/// adding keys.
std::string report_to_json(const PValueReport& report, int indent = 2);

/// "num/den" or decimal line for the plain output formats.
std::string report_to_rational_line(const PValueReport& report);
std::string report_to_decimal_line(const PValueReport& report);

} // namespace occtail
