#pragma once

namespace sumsq {

// Kernels come in a serial reference flavour and an OpenMP flavour.
// Both must produce bit-identical results: parallel code only fills
// per-index buffers, reductions are always done serially in index order.
enum class Exec { serial, parallel };

}  // namespace sumsq
