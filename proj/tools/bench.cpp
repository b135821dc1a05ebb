// Throughput comparison: BigInt reference path vs the 256-bit kernel, and
// serial vs OpenMP scan over the same range.
//
//   johnson_iso_bench [n_to]      (default 1000000)

#include "jiso/scan.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace jiso;
using clk = std::chrono::steady_clock;

static double secs(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    const u64 n_to = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1'000'000;
    const u64 n_from = 3;
    const u64 count = n_to - n_from + 1;

    std::cout << "range [" << n_from << ", " << n_to << "] (" << count << " values of n)\n\n";

    // per-n kernel comparison on a prefix small enough for the BigInt path
    const u64 ref_to = std::min<u64>(n_to, 200'000);
    const u64 ref_count = ref_to - n_from + 1;
    {
        auto t0 = clk::now();
        const auto ref = scan_conjecture_reference(n_from, ref_to);
        auto t1 = clk::now();
        const double ref_s = secs(t0, t1);

        ScanOptions opts;
        opts.workers = 1;
        opts.slow_path_samples = 0;
        t0 = clk::now();
        const auto fast = scan_conjecture(n_from, ref_to, opts);
        t1 = clk::now();
        const double fast_s = secs(t0, t1);

        if (!(ref == fast)) {
            std::cerr << "reference and kernel disagree on [" << n_from << ", " << ref_to << "]\n";
            return 1;
        }
        std::cout << "BigInt reference:  " << ref_s << " s  (" << ref_count / ref_s << " n/s)\n";
        std::cout << "256-bit kernel:    " << fast_s << " s  (" << ref_count / fast_s << " n/s)\n";
        std::cout << "kernel speedup:    " << ref_s / fast_s << "x  (identical reports)\n\n";
    }

    // serial vs parallel kernel scan over the full range; chunks sized so
    // even small ranges split across workers
    {
        const u64 chunk = std::max<u64>(4096, count / 64);
        ScanOptions serial;
        serial.workers = 1;
        serial.slow_path_samples = 0;
        serial.chunk_size = chunk;
        auto t0 = clk::now();
        const auto r1 = scan_conjecture(n_from, n_to, serial);
        auto t1 = clk::now();
        const double s1 = secs(t0, t1);

        ScanOptions parallel;
        parallel.workers = 0;  // all available
        parallel.slow_path_samples = 0;
        parallel.chunk_size = chunk;
        t0 = clk::now();
        const auto rp = scan_conjecture(n_from, n_to, parallel);
        t1 = clk::now();
        const double sp = secs(t0, t1);

        if (!(r1 == rp)) {
            std::cerr << "serial and parallel scans disagree\n";
            return 1;
        }
        int threads = 1;
#ifdef _OPENMP
        threads = omp_get_max_threads();
#endif
        std::cout << "scan, 1 worker:    " << s1 << " s  (" << count / s1 << " n/s)\n";
        std::cout << "scan, " << threads << " workers:   " << sp << " s  (" << count / sp
                  << " n/s)\n";
        std::cout << "parallel speedup:  " << s1 / sp << "x  (identical reports, checksum "
                  << std::hex << r1.checksum << std::dec << ")\n";
        std::cout << "max gap " << ratio_to_string(r1.max_gap) << " at n=" << r1.argmax_n << "\n";
    }
    return 0;
}
