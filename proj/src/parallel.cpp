#include "brachy/parallel.hpp"

#include <omp.h>

namespace brachy {

namespace {
int g_jobs = 0;
}

void set_jobs(int jobs) { g_jobs = jobs > 0 ? jobs : 0; }

int effective_jobs() { return g_jobs > 0 ? g_jobs : omp_get_max_threads(); }

} // namespace brachy
