// Compares the serial reference kernels against the OpenMP ones on inputs
// large enough to matter: table classification, brachymorphism enumeration,
// and the order-4 semiring model search.

#include <cstdio>
#include <functional>
#include <omp.h>

#include "brachy/finstruct.hpp"
#include "brachy/modelsearch.hpp"
#include "brachy/morphism.hpp"
#include "brachy/parallel.hpp"
#include "brachy/ringzoo.hpp"

using namespace brachy;

namespace {

double time_of(const char* name, int repeats, const std::function<void()>& fn) {
    double t0 = omp_get_wtime();
    for (int i = 0; i < repeats; ++i) fn();
    double dt = (omp_get_wtime() - t0) / repeats;
    printf("%-42s %10.3f ms\n", name, dt * 1000.0);
    return dt;
}

} // namespace

int main() {
    printf("threads available: %d\n\n", omp_get_max_threads());

    {
        FiniteStruct big = zoo_zmod(512);
        TableView t{big.order(), big.add_table().data(), big.mul_table().data(),
                    big.zero(), big.one()};
        double s = time_of("classify zmod(512), serial", 3,
                           [&] { classify_tables_serial(t); });
        double p = time_of("classify zmod(512), openmp", 3,
                           [&] { classify_tables_parallel(t); });
        printf("  speedup %.2fx\n\n", s / p);
    }

    {
        FiniteStruct m2 = build_zoo("matring(zmod(2),2)");
        EnumConfig serial_cfg;
        serial_cfg.jobs = 1;
        double s = time_of("enumerate M2(F2) endomorphisms, 1 job", 3, [&] {
            enumerate_brachymorphisms(m2, m2, serial_cfg);
        });
        EnumConfig par_cfg;
        double p = time_of("enumerate M2(F2) endomorphisms, openmp", 3, [&] {
            enumerate_brachymorphisms(m2, m2, par_cfg);
        });
        printf("  speedup %.2fx\n\n", s / p);
    }

    {
        SearchTask task;
        task.cls = StructClass::CommutativeSemiring;
        task.order = 4;
        task.jobs = 1;
        double s = time_of("semiring search order 4, 1 job", 1,
                           [&] { search_counterexample(task); });
        task.jobs = 0;
        double p = time_of("semiring search order 4, openmp", 1,
                           [&] { search_counterexample(task); });
        printf("  speedup %.2fx\n", s / p);
    }
    return 0;
}
