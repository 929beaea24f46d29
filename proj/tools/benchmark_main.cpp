// Times every parallel kernel against its serial twin and checks that the
// results agree bit for bit. Usage: occtail_bench [--quick]

#include <chrono>
#include <cstdio>
#include <string>

#include "occtail/engine.hpp"
#include "occtail/oracles.hpp"
#include "occtail/parallel.hpp"
#include "occtail/validate.hpp"

namespace {

using namespace occtail;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report_row(const char* kernel, double serial_s, double parallel_s, bool equal) {
    std::printf("%-22s %10.3fs %10.3fs %8.2fx   %s\n", kernel, serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    std::printf("occtail kernel benchmark (%d thread(s) available)\n\n", max_threads());
    std::printf("%-22s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const ProblemInstance inst{quick ? 120 : 300, quick ? 60 : 160, 30, 8};
        auto t0 = Clock::now();
        const BigInt serial = favorable_count_fast(inst, RemainderPoolMode::Corrected,
                                                   Exec::Serial);
        const double serial_s = seconds_since(t0);
        t0 = Clock::now();
        const BigInt parallel = favorable_count_fast(inst, RemainderPoolMode::Corrected,
                                                     Exec::Parallel);
        report_row("closed-formula count", serial_s, seconds_since(t0), serial == parallel);
    }

    {
        const ProblemInstance inst{6, quick ? 8 : 10, 3, 2};
        auto t0 = Clock::now();
        const ExactRational serial = pvalue_exhaustive(inst, {}, Exec::Serial);
        const double serial_s = seconds_since(t0);
        t0 = Clock::now();
        const ExactRational parallel = pvalue_exhaustive(inst, {}, Exec::Parallel);
        report_row("exhaustive subsets", serial_s, seconds_since(t0), serial == parallel);
    }

    {
        const ProblemInstance inst{8, 20, 5, 2};
        const std::uint64_t samples = quick ? 400'000 : 2'000'000;
        auto t0 = Clock::now();
        const MonteCarloEstimate serial = pvalue_montecarlo(inst, samples, 7, Exec::Serial);
        const double serial_s = seconds_since(t0);
        t0 = Clock::now();
        const MonteCarloEstimate parallel = pvalue_montecarlo(inst, samples, 7, Exec::Parallel);
        report_row("montecarlo sampling", serial_s, seconds_since(t0), serial == parallel);
    }

    {
        ValidationOptions options;
        options.max_n = quick ? 6 : 8;
        options.exec = Exec::Serial;
        auto t0 = Clock::now();
        const ValidationSummary serial = run_validation(options);
        const double serial_s = seconds_since(t0);
        options.exec = Exec::Parallel;
        t0 = Clock::now();
        const ValidationSummary parallel = run_validation(options);
        const bool equal = serial.naive_checks == parallel.naive_checks &&
                           serial.oracle_checks == parallel.oracle_checks &&
                           serial.mismatches.size() == parallel.mismatches.size();
        report_row("validation grid", serial_s, seconds_since(t0), equal);
    }

    return 0;
}
