// Compares the serial reference kernels against the OpenMP ones: cyclotomic
// multiplication at growing ring degree, and the obstruction candidate scan.

#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "thetaring/cyclo.hpp"
#include "thetaring/obstruction.hpp"

using namespace thetaring;

namespace {

std::vector<Int> random_coeffs(std::size_t n, unsigned bits, std::mt19937& rng) {
    std::vector<Int> v(n);
    for (auto& c : v) {
        Int acc = 0;
        for (unsigned b = 0; b < bits; b += 32)
            acc = (acc << 32) + Int(static_cast<unsigned long>(rng()));
        c = acc;
    }
    return v;
}

void bench_convolution(unsigned long p, unsigned k, unsigned bits, int reps) {
    auto ring = CycloRing::create(p, k);
    std::mt19937 rng(7);
    auto a = random_coeffs(ring->degree(), bits, rng);
    auto b = random_coeffs(ring->degree(), bits, rng);

    double t0 = omp_get_wtime();
    std::vector<Int> serial;
    for (int r = 0; r < reps; ++r) serial = detail::convolve_serial(a, b);
    double t_serial = omp_get_wtime() - t0;

    t0 = omp_get_wtime();
    std::vector<Int> parallel;
    for (int r = 0; r < reps; ++r) parallel = detail::convolve_omp(a, b);
    double t_omp = omp_get_wtime() - t0;

    std::printf("convolve  p=%lu k=%u deg=%-5lu bits=%-4u  serial %8.3f ms  omp %8.3f ms  speedup %.2fx  %s\n",
                p, k, ring->degree(), bits, 1e3 * t_serial / reps, 1e3 * t_omp / reps,
                t_serial / t_omp, serial == parallel ? "match" : "MISMATCH");
}

void bench_obstruction(unsigned long p, unsigned k) {
    double t0 = omp_get_wtime();
    ObstructionReport report = obstruction_report(p, k);
    double t = omp_get_wtime() - t0;
    std::printf("obstruction scan  p=%lu k=%u  candidates=%zu  %8.3f ms (%d threads)\n", p, k,
                report.verdicts.size(), 1e3 * t, omp_get_max_threads());
}

}  // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());
    bench_convolution(7, 3, 64, 20);
    bench_convolution(3, 7, 64, 5);
    bench_convolution(3, 7, 512, 5);
    bench_convolution(2, 12, 256, 3);
    std::printf("\n");
    bench_obstruction(7, 3);
    bench_obstruction(5, 4);
    return 0;
}
