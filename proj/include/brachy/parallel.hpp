#pragma once

namespace brachy {

// Worker count for the parallel kernels; 0 restores the OpenMP default.
// Results are deterministic regardless of the setting.
void set_jobs(int jobs);
int effective_jobs();

} // namespace brachy
