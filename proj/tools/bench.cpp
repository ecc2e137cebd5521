// Throughput comparison of the serial reference kernels against the OpenMP
// paths: the brute-force tallies over F_{q^n} / monic polynomials and the
// per-character log-series batch of the counting pipeline.

#include <chrono>
#include <cstdio>
#include <string>

#include "prescount/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace prescount;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds(t0);
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   omp %8.3f s   speedup %.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 18;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    {
        Prescription p = Prescription::type_two(FieldCtx::prime_field(2), 4);
        GroupStructure gs = decompose(p);
        Int budget = nt::pow_int(2, static_cast<unsigned long>(n));
        std::vector<Int> a, b;
        double ts = timed([&] { a = brute_F(p, gs, n, budget, Exec::serial); });
        double tp = timed([&] { b = brute_F(p, gs, n, budget, Exec::parallel); });
        if (a != b) {
            std::fprintf(stderr, "brute_F serial/parallel tallies differ\n");
            return 1;
        }
        report("brute_F q=2 II ell=4", ts, tp);
    }
    {
        Prescription p = Prescription::type_one(FieldCtx::prime_field(2), 2, 2);
        GroupStructure gs = decompose(p);
        int d = std::min(n, 20);
        Int budget = nt::pow_int(2, static_cast<unsigned long>(d));
        std::vector<Int> a, b;
        double ts = timed([&] { a = brute_I(p, gs, d, budget, Exec::serial); });
        double tp = timed([&] { b = brute_I(p, gs, d, budget, Exec::parallel); });
        if (a != b) {
            std::fprintf(stderr, "brute_I serial/parallel tallies differ\n");
            return 1;
        }
        report("brute_I q=2 I ell=t=2", ts, tp);
    }
    {
        Prescription p = Prescription::type_two(FieldCtx::prime_field(3), 3);
        GroupStructure gs = decompose(p);
        std::vector<std::vector<Int>> a, b;
        double ts = timed([&] {
            Counter c(p, gs);
            a = c.n_table(160, Exec::serial);
        });
        double tp = timed([&] {
            Counter c(p, gs);
            b = c.n_table(160, Exec::parallel);
        });
        if (a != b) {
            std::fprintf(stderr, "n_table serial/parallel results differ\n");
            return 1;
        }
        report("n_table q=3 II ell=3 n<=160", ts, tp);
    }
    return 0;
}
