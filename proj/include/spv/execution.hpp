#pragma once

namespace spv {

/// Selects the OpenMP kernel or its serial reference. Both produce
/// bit-identical results.
enum class Execution { serial, parallel };

/// Number of threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace spv
