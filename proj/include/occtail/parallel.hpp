#pragma once

namespace occtail {

/// Kernel execution policy. Every parallel kernel has a serial twin that
/// produces bit-identical results; all accumulation is over exact integers,
/// so summation order cannot change a value.
enum class Exec {
    Serial,
    Parallel,
};

/// Worker count the Parallel policy would use (1 without OpenMP).
int max_threads();

} // namespace occtail
