// Serial reference vs. OpenMP density kernel on a fixed sample.
//
//   bench_density [count] [m] [n] [bound]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "ellsurf/family.hpp"

using namespace ellsurf;

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    BoxSpec spec;
    spec.exhaustive = false;
    spec.count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
    spec.m = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 2;
    spec.n = argc > 3 ? static_cast<unsigned>(std::atoi(argv[3])) : 3;
    spec.bound = argc > 4 ? std::atol(argv[4]) : 10;
    spec.seed = 1;
    PairSource src(spec);

    DensityReport ref;
    double t_serial = seconds([&] { ref = density_report_serial(src, true); });
    std::printf("pairs %llu, (m,n) = (%u,%u), bound %s, %d hardware threads\n",
                static_cast<unsigned long long>(src.size()), spec.m, spec.n, to_string(spec.bound).c_str(),
                omp_get_num_procs());
    std::printf("%-10s %10s %10s %s\n", "kernel", "seconds", "speedup", "matches");
    std::printf("%-10s %10.3f %10.2f %s\n", "serial", t_serial, 1.0, "-");

    std::vector<int> workers{1, 2, 4, 8, 16};
    bool all_match = true;
    for (int w : workers) {
        DensityReport r;
        double t = seconds([&] { r = density_report(src, true, w); });
        bool match = r == ref;
        all_match = all_match && match;
        char label[16];
        std::snprintf(label, sizeof label, "omp x%d", w);
        std::printf("%-10s %10.3f %10.2f %s\n", label, t, t_serial / t, match ? "yes" : "NO");
    }
    return all_match ? 0 : 1;
}
