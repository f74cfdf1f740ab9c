// Benchmark of the OpenMP height/counting kernels against their serial
// reference implementations. The Gram matrix dominates end-to-end runtime:
// every pairing doubles exact rational coordinates six times, so entries are
// heavy and embarrassingly parallel.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ecforge/heights.hpp"
#include "ecforge/repro.hpp"
#include "ecforge/torsion.hpp"

using namespace ecforge;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_gram(const char* label, const WeierstrassCurve& e,
                const std::vector<CurvePoint>& pts, int doublings) {
    auto t0 = clock_type::now();
    auto serial = gram_regulator(e, pts, doublings, GramMode::Serial);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto parallel = gram_regulator(e, pts, doublings, GramMode::Parallel);
    const double tp = seconds_since(t0);
    const bool match = serial.regulator.value == parallel.regulator.value;
    std::printf("gram %-6s m=%2zu doublings=%d  serial %8.3fs  openmp %8.3fs  speedup %.2fx  %s\n",
                label, pts.size(), doublings, ts, tp, ts / tp,
                match ? "identical" : "MISMATCH");
}

void bench_count(const WeierstrassCurve& e, long p) {
    auto t0 = clock_type::now();
    const long ns = count_points_mod_p(e, p, CountMode::Serial);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const long np = count_points_mod_p(e, p, CountMode::Parallel);
    const double tp = seconds_since(t0);
    std::printf("count p=%-8ld          serial %8.3fs  openmp %8.3fs  speedup %.2fx  %s\n", p, ts,
                tp, ts / tp, ns == np ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int doublings = argc > 1 ? std::atoi(argv[1]) : 6;
    std::printf("threads: %d\n", omp_get_max_threads());

    const auto& c1 = repro_entry("C-1");
    bench_gram("C-1", *c1.expect_curve, c1.paper_points, doublings);

    const auto& g1 = repro_entry("G-1");
    bench_gram("G-1", *g1.expect_curve, g1.paper_points, doublings);

    // point counting modulo a large prime; the torsion bound itself only
    // ever uses tiny primes, this stresses the kernel
    WeierstrassCurve small(Rational(0), Rational(0), Rational(0), Rational(-399), Rational(6226));
    bench_count(small, 1000003);
    bench_count(small, 10000019);
    return 0;
}
