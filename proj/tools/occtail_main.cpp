// occtail: exact tail probabilities for distinct-type occurrence in uniform
// draws without replacement. Subcommands: pvalue, validate, enrich, sweep.
//
// Exit codes: 0 success, 1 validation mismatch, 2 invalid input,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "occtail/engine.hpp"
#include "occtail/errors.hpp"
#include "occtail/ingest.hpp"
#include "occtail/oracles.hpp"
#include "occtail/render.hpp"
#include "occtail/report.hpp"
#include "occtail/validate.hpp"
#include "occtail/version.hpp"

namespace {

using namespace occtail;

struct ComputeArgs {
    std::string mode = "fast";
    std::string remainder = "corrected";
    std::string format = "json";
    int precision = 15;
    std::uint64_t budget = EnumerationBudget{}.limit;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 1;
};

void add_compute_flags(CLI::App* cmd, ComputeArgs& args, bool with_format = true) {
    cmd->add_option("--mode", args.mode, "computation mode")
        ->check(CLI::IsMember({"fast", "naive", "exhaustive", "montecarlo"}))
        ->capture_default_str();
    cmd->add_option("--remainder", args.remainder, "remainder pool mode")
        ->check(CLI::IsMember({"corrected", "paper"}))
        ->capture_default_str();
    if (with_format) {
        cmd->add_option("--format", args.format, "output format")
            ->check(CLI::IsMember({"json", "rational", "decimal"}))
            ->capture_default_str();
    }
    cmd->add_option("--precision", args.precision, "significant digits for decimals")
        ->check(CLI::Range(1, 10'000))
        ->capture_default_str();
    cmd->add_option("--budget", args.budget, "enumeration step budget")
        ->capture_default_str();
    cmd->add_option("--samples", args.samples, "montecarlo sample count")
        ->capture_default_str();
    cmd->add_option("--seed", args.seed, "montecarlo seed")->capture_default_str();
}

ComputeMode parse_mode(const std::string& mode) {
    if (mode == "fast") return ComputeMode::Fast;
    if (mode == "naive") return ComputeMode::Naive;
    if (mode == "exhaustive") return ComputeMode::Exhaustive;
    return ComputeMode::MonteCarlo;
}

RemainderPoolMode parse_remainder(const std::string& remainder) {
    return remainder == "paper" ? RemainderPoolMode::PaperFaithful
                                : RemainderPoolMode::Corrected;
}

// Unreduced favorable count: p * total, exact by construction.
BigInt scale_to_total(const ExactRational& p, const BigInt& total) {
    BigInt quotient;
    mpz_divexact(quotient.get_mpz_t(), total.get_mpz_t(), p.denominator().get_mpz_t());
    return BigInt(p.numerator() * quotient);
}

PValueReport compute_report(const ProblemInstance& inst, const ComputeArgs& args) {
    inst.validate();
    PValueReport report;
    report.instance = inst;
    report.mode = parse_mode(args.mode);
    report.remainder = parse_remainder(args.remainder);
    report.precision = args.precision;
    report.budget = args.budget;
    const EnumerationBudget budget{args.budget};

    switch (report.mode) {
    case ComputeMode::Fast:
        report.p = pvalue_fast(inst, report.remainder);
        report.total_count = binomial(inst.positions(), inst.x);
        report.favorable_count = scale_to_total(report.p, report.total_count);
        break;
    case ComputeMode::Naive:
        report.p = pvalue_naive(inst, report.remainder, budget);
        report.total_count = binomial(inst.positions(), inst.x);
        report.favorable_count = scale_to_total(report.p, report.total_count);
        break;
    case ComputeMode::Exhaustive:
        report.p = pvalue_exhaustive(inst, budget);
        report.total_count = binomial(inst.positions(), inst.x);
        report.favorable_count = scale_to_total(report.p, report.total_count);
        break;
    case ComputeMode::MonteCarlo: {
        const MonteCarloEstimate mc = pvalue_montecarlo(inst, args.samples, args.seed);
        report.p = mc.estimate;
        report.favorable_count = BigInt(static_cast<unsigned long>(mc.hits));
        report.total_count = BigInt(static_cast<unsigned long>(mc.samples));
        report.montecarlo = mc;
        break;
    }
    }
    if (report.p > rational_one()) {
        std::cerr << "warning: computed value " << report.p.to_fraction_string()
                  << " exceeds 1; the 'paper' remainder mode overcounts when x < y\n";
    }
    return report;
}

void print_report(const PValueReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else if (format == "rational") {
        std::cout << report_to_rational_line(report) << "\n";
    } else {
        std::cout << report_to_decimal_line(report) << "\n";
    }
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

nlohmann::json derived_block(const DerivedInstance& derived) {
    return {
        {"n", std::to_string(derived.instance.n)},
        {"x", std::to_string(derived.instance.x)},
        {"y", std::to_string(derived.instance.y)},
        {"z", std::to_string(derived.instance.z)},
        {"universe_inferred", derived.universe_inferred ? "true" : "false"},
        {"warnings", derived.warnings},
    };
}

int run_pvalue(const ProblemInstance& inst, const ComputeArgs& args) {
    print_report(compute_report(inst, args), args.format);
    return 0;
}

int run_validate(const ValidationOptions& options, const std::string& remainder_flag) {
    ValidationOptions effective = options;
    if (effective.max_n < 2) {
        throw InputError("--max-n must be at least 2, got " + std::to_string(effective.max_n));
    }
    if (effective.max_x < 0 || effective.max_y < 0) {
        throw InputError("--max-x and --max-y must be nonnegative");
    }
    if (!remainder_flag.empty()) {
        effective.remainder = parse_remainder(remainder_flag);
    }
    const ValidationSummary summary = run_validation(effective);
    std::cout << "fast-vs-naive checks:      " << summary.naive_checks << "\n";
    std::cout << "fast-vs-exhaustive checks: " << summary.oracle_checks << "\n";
    std::cout << summary.mismatches.size() << " mismatches\n";
    if (!summary.mismatches.empty()) {
        const Mismatch& first = summary.mismatches.front();
        std::cout << "first mismatch: " << first.comparison << " at n=" << first.instance.n
                  << " x=" << first.instance.x << " y=" << first.instance.y
                  << " z=" << first.instance.z << " remainder=" << to_string(first.remainder)
                  << ": fast=" << first.fast_value << " reference=" << first.reference_value
                  << "\n";
        return 1;
    }
    return 0;
}

struct EnrichArgs {
    std::string edges_path;
    std::string regulators_path;
    std::string universe_path;
    bool dedupe = false;
    bool allow_unknown = false;
    bool allow_self_loops_drop = false;
};

int run_enrich(const EnrichArgs& enrich, const ComputeArgs& compute) {
    const std::vector<Edge> edges = parse_edge_list(slurp_file(enrich.edges_path));
    const std::vector<std::string> regulators =
        parse_identifier_list(slurp_file(enrich.regulators_path));
    std::optional<std::vector<std::string>> universe;
    if (!enrich.universe_path.empty()) {
        universe = parse_identifier_list(slurp_file(enrich.universe_path));
    }
    DerivePolicy policy;
    policy.dedupe_edges = enrich.dedupe;
    policy.allow_unknown_regulators = enrich.allow_unknown;
    policy.drop_self_loops = enrich.allow_self_loops_drop;

    const DerivedInstance derived = derive_instance(edges, regulators, universe, policy);
    for (const std::string& warning : derived.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    if (derived.universe_inferred) {
        std::cerr << "note: universe inferred from input files (pass --universe to fix n)\n";
    }

    const PValueReport report = compute_report(derived.instance, compute);
    if (compute.format == "json") {
        nlohmann::json doc = nlohmann::json::parse(report_to_json(report));
        doc["derived"] = derived_block(derived);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n=" << derived.instance.n << " x=" << derived.instance.x
                  << " y=" << derived.instance.y << " z=" << derived.instance.z
                  << " universe=" << (derived.universe_inferred ? "inferred" : "explicit")
                  << "\n";
        print_report(report, compute.format);
    }
    return 0;
}

struct SweepRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

SweepRange parse_range(const std::string& text) {
    const std::size_t sep = text.find("..");
    if (sep == std::string::npos) {
        throw InputError("sweep range must look like A..B, got \"" + text + "\"");
    }
    SweepRange range;
    try {
        range.lo = std::stoll(text.substr(0, sep));
        range.hi = std::stoll(text.substr(sep + 2));
    } catch (const std::exception&) {
        throw InputError("sweep range must be integral, got \"" + text + "\"");
    }
    if (range.lo > range.hi) {
        throw InputError("empty sweep range \"" + text + "\"");
    }
    return range;
}

int run_sweep(ProblemInstance base, const ComputeArgs& args, const std::string& sweep_z,
              const std::string& sweep_x) {
    if (sweep_z.empty() == sweep_x.empty()) {
        throw InputError("exactly one of --sweep-z or --sweep-x is required");
    }
    if (args.format == "rational" || args.format == "decimal") {
        throw InputError("sweep supports --format json or text");
    }
    const bool over_z = !sweep_z.empty();
    const SweepRange range = parse_range(over_z ? sweep_z : sweep_x);

    // validate every row before emitting anything
    std::vector<ProblemInstance> rows;
    for (std::int64_t v = range.lo; v <= range.hi; ++v) {
        ProblemInstance inst = base;
        (over_z ? inst.z : inst.x) = v;
        inst.validate();
        rows.push_back(inst);
    }
    if (args.format == "text") {
        std::cout << (over_z ? "z" : "x") << "\tp_rational\tp_decimal\tlog10_p\n";
    }
    for (const ProblemInstance& inst : rows) {
        const PValueReport report = compute_report(inst, args);
        if (args.format == "text") {
            std::cout << (over_z ? inst.z : inst.x) << "\t"
                      << report.p.to_fraction_string() << "\t"
                      << render_decimal(report.p, report.precision) << "\t"
                      << render_log10(report.p) << "\n";
        } else {
            std::cout << report_to_json(report, -1) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tail probability of seeing z or more of y designated element types "
                 "when drawing x items from a pool of n types with n-1 copies each"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    // pvalue
    ProblemInstance pv_inst;
    ComputeArgs pv_args;
    CLI::App* pvalue_cmd = app.add_subcommand("pvalue", "compute one tail probability");
    pvalue_cmd->add_option("--n", pv_inst.n, "number of element types")->required();
    pvalue_cmd->add_option("--x", pv_inst.x, "items drawn")->required();
    pvalue_cmd->add_option("--y", pv_inst.y, "designated types")->required();
    pvalue_cmd->add_option("--z", pv_inst.z, "threshold (z or more)")->required();
    add_compute_flags(pvalue_cmd, pv_args);

    // validate
    ValidationOptions val_options;
    std::string val_remainder;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "cross-check the closed formula against references");
    validate_cmd->add_option("--max-n", val_options.max_n)->capture_default_str();
    validate_cmd->add_option("--max-x", val_options.max_x)->capture_default_str();
    validate_cmd->add_option("--max-y", val_options.max_y)->capture_default_str();
    validate_cmd->add_option("--oracle-max-n", val_options.oracle_max_n)->capture_default_str();
    validate_cmd->add_option("--budget", val_options.budget.limit)->capture_default_str();
    validate_cmd
        ->add_option("--remainder", val_remainder,
                     "restrict to one remainder mode (oracle checks then use it too)")
        ->check(CLI::IsMember({"corrected", "paper"}));

    // enrich
    EnrichArgs en_args;
    ComputeArgs en_compute;
    CLI::App* enrich_cmd =
        app.add_subcommand("enrich", "derive (n, x, y, z) from edge/regulator files");
    enrich_cmd->add_option("--edges", en_args.edges_path, "edge list file")->required();
    enrich_cmd->add_option("--regulators", en_args.regulators_path, "regulator list file")
        ->required();
    enrich_cmd->add_option("--universe", en_args.universe_path, "universe file");
    enrich_cmd->add_flag("--dedupe", en_args.dedupe, "deduplicate repeated edges");
    enrich_cmd->add_flag("--allow-unknown", en_args.allow_unknown,
                         "drop regulators outside the universe");
    enrich_cmd->add_flag("--allow-self-loops-drop", en_args.allow_self_loops_drop,
                         "drop self-loop edges");
    add_compute_flags(enrich_cmd, en_compute);

    // sweep
    ProblemInstance sw_inst;
    ComputeArgs sw_args;
    sw_args.format = "json";
    std::string sweep_z, sweep_x;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "one row per swept parameter value");
    sweep_cmd->add_option("--n", sw_inst.n)->required();
    sweep_cmd->add_option("--x", sw_inst.x, "items drawn (fixed unless swept)");
    sweep_cmd->add_option("--y", sw_inst.y)->required();
    sweep_cmd->add_option("--z", sw_inst.z, "threshold (fixed unless swept)");
    sweep_cmd->add_option("--sweep-z", sweep_z, "inclusive range A..B");
    sweep_cmd->add_option("--sweep-x", sweep_x, "inclusive range A..B");
    sweep_cmd->add_option("--mode", sw_args.mode)
        ->check(CLI::IsMember({"fast", "naive", "exhaustive", "montecarlo"}))
        ->capture_default_str();
    sweep_cmd->add_option("--remainder", sw_args.remainder)
        ->check(CLI::IsMember({"corrected", "paper"}))
        ->capture_default_str();
    sweep_cmd->add_option("--format", sw_args.format, "json (one object per line) or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sweep_cmd->add_option("--precision", sw_args.precision)->check(CLI::Range(1, 10'000));
    sweep_cmd->add_option("--budget", sw_args.budget)->capture_default_str();
    sweep_cmd->add_option("--samples", sw_args.samples)->capture_default_str();
    sweep_cmd->add_option("--seed", sw_args.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pvalue_cmd->parsed()) {
            return run_pvalue(pv_inst, pv_args);
        }
        if (validate_cmd->parsed()) {
            return run_validate(val_options, val_remainder);
        }
        if (enrich_cmd->parsed()) {
            return run_enrich(en_args, en_compute);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(sw_inst, sw_args, sweep_z, sweep_x);
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
