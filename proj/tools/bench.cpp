// Compares the OpenMP variants against the serial references on identical
// inputs: wall times plus an agreement check on the outputs.  Usage:
// bench [enum_max] [scan_max].

#include "pbsurf/classify.hpp"

#include <chrono>
#include <iostream>
#include <string>

using namespace pbsurf;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long enum_max = 60;
    long long scan_max = 12;
    if (argc > 1) enum_max = std::stoll(argv[1]);
    if (argc > 2) scan_max = std::stoll(argv[2]);

#ifdef _OPENMP
    std::cout << "openmp: enabled\n";
#else
    std::cout << "openmp: disabled (parallel variants run serially)\n";
#endif

    auto pred = [](const ExponentTuple& t) {
        return partition_class(t).major == PartitionMajor::S0;
    };
    auto t0 = clock_type::now();
    std::vector<ExponentTuple> par = enumerate_class(enum_max, pred);
    auto t1 = clock_type::now();
    std::vector<ExponentTuple> ser = enumerate_class_serial(enum_max, pred);
    auto t2 = clock_type::now();
    bool enum_ok = par == ser;
    std::cout << "enumerate_class max=" << enum_max << ": parallel " << seconds(t0, t1)
              << " s, serial " << seconds(t1, t2) << " s, " << par.size() << " tuples, outputs "
              << (enum_ok ? "identical" : "DIFFER") << "\n";

    auto t3 = clock_type::now();
    ScanSummary sp = scan_pairs(scan_max);
    auto t4 = clock_type::now();
    ScanSummary ss = scan_pairs_serial(scan_max);
    auto t5 = clock_type::now();
    bool scan_ok = sp.pairs == ss.pairs && sp.isomorphic == ss.isomorphic &&
                   sp.histogram == ss.histogram &&
                   sp.fallback_pairs.size() == ss.fallback_pairs.size();
    std::cout << "scan_pairs max=" << scan_max << ": parallel " << seconds(t3, t4) << " s, serial "
              << seconds(t4, t5) << " s, " << sp.pairs << " pairs, summaries "
              << (scan_ok ? "identical" : "DIFFER") << "\n";
    for (const auto& [kind, count] : sp.histogram)
        std::cout << "  " << certificate_kind_name(kind) << ": " << count << "\n";
    std::cout << "  isomorphic: " << sp.isomorphic << ", fallbacks: " << sp.fallback_pairs.size()
              << "\n";

    return (enum_ok && scan_ok) ? 0 : 1;
}
