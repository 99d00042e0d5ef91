// Times the serial reference against the OpenMP kernel on the same sweep
// config and reports the speedup. The outputs are compared byte for byte.

#include "monoidlab/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using namespace monoidlab;

namespace {

double run_once(const SweepConfig& cfg, SweepExecution exec, std::string& csv) {
    std::ostringstream out;
    auto t0 = std::chrono::steady_clock::now();
    SweepSummary sum = run_intersection_sweep(cfg, out, exec);
    auto t1 = std::chrono::steady_clock::now();
    csv = out.str();
    std::cerr << "  records: " << sum.records << ", max ratio: " << sum.max_ratio << "\n";
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial-vs-parallel benchmark of the intersection sweep"};
    SweepConfig cfg;
    app.add_option("--alphabet", cfg.alphabet_size, "alphabet size (2 or 3)");
    app.add_option("--max-len", cfg.max_gen_len, "max generator length");
    app.add_option("--max-pair-size", cfg.max_pair_size, "max |x|+|y|");
    app.add_option("--workers", cfg.workers, "worker threads (0 = auto)");
    CLI11_PARSE(app, argc, argv);

    std::string serial_csv, parallel_csv;
    std::cerr << "serial reference:\n";
    double ts = run_once(cfg, SweepExecution::Serial, serial_csv);
    std::cerr << "parallel kernel (" << effective_workers(cfg) << " workers):\n";
    double tp = run_once(cfg, SweepExecution::Parallel, parallel_csv);

    std::cout << "serial:   " << ts << " s\n"
              << "parallel: " << tp << " s\n"
              << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n"
              << "outputs identical: " << (serial_csv == parallel_csv ? "yes" : "NO") << "\n";
    return serial_csv == parallel_csv ? 0 : 1;
}
