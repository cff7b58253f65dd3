#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tiler/loop_ir.hpp"
#include "tiler/stencil.hpp"

namespace tiler {

/// Address map shared by the executor, the cache simulator, and the
/// emitted C code. Storage is slot-major, then row-major over the
/// halo-padded spatial box. Logical time level l lives in slot
/// l mod slots; step t writes level t + time_depth, so initial data
/// occupies levels [0, time_depth) and no level is ever negative.
struct GridLayout {
  std::int64_t slots = 0;
  int time_depth = 0;                  // delta_t
  std::vector<std::int64_t> interior;  // D_i
  std::vector<int> halo;               // delta_i per side
  std::vector<std::int64_t> padded;    // D_i + 2*delta_i

  static GridLayout make(const StencilSpec& spec, const IterationSpace& space,
                         std::int64_t slots);

  std::int64_t plane() const {
    std::int64_t p = 1;
    for (auto e : padded) p *= e;
    return p;
  }
  std::int64_t total_elems() const { return slots * plane(); }

  /// True when every coordinate lies within the padded box. Coordinates
  /// are interior-relative; the halo admits [-halo_i, D_i + halo_i).
  bool in_padded(std::span<const std::int64_t> x) const;

  /// Flat element offset of (level, x..). The caller guarantees
  /// in_padded(x); level may be any non-negative logical level.
  std::int64_t offset(std::int64_t level, std::span<const std::int64_t> x) const;
};

/// Time-buffered float32 state. last_level tracks the highest populated
/// logical level so grids with different slot counts remain comparable.
struct Grid {
  GridLayout layout;
  std::vector<float> data;
  std::int64_t last_level = 0;

  float& at(std::int64_t level, std::span<const std::int64_t> x) {
    return data[layout.offset(level, x)];
  }
  float at(std::int64_t level, std::span<const std::int64_t> x) const {
    return data[layout.offset(level, x)];
  }
};

struct ExecReport {
  std::int64_t points_updated = 0;
  std::int64_t flops = 0;
  double wall_seconds = 0.0;
};

struct ExecOptions {
  /// Iterate every parallel-marked loop in reverse order. Outputs of
  /// correctly marked nests must not change by a single bit.
  bool reverse_parallel = false;
};

/// The deterministic LCG stream used for grid initialization, frozen so
/// emitted C can reproduce it bit-exactly. The state advances before
/// each value; values land in [0.001, 0.002) as float32.
struct LcgStream {
  std::uint64_t state;
  explicit LcgStream(std::uint64_t seed) : state(seed) {}
  float next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<float>(
        0.001 + 0.001 * (static_cast<double>(state >> 40) / 16777216.0));
  }
};

/// Slot count execute() requires for a nest: delta_t + t_t when
/// time-tiled, else delta_t + 1.
std::int64_t required_slots(const LoopNest& nest, const StencilSpec& spec);

/// Grid with levels [0, delta_t) filled (halo included) from the LCG
/// stream in level-major, row-major order; remaining slots zero.
Grid init_grid(const StencilSpec& spec, const IterationSpace& space,
               std::uint64_t seed, std::int64_t slots);

/// Reference interpreter. Evaluates the body at every point the nest
/// executes: acc = coeff_1*read_1, then acc = acc + coeff_k*read_k in
/// spec term order, all in float32. Sequential by contract. Throws Error
/// on an out-of-bounds access (a transformation bug) or missing slots.
ExecReport execute(const LoopNest& nest, const StencilSpec& spec,
                   const IterationSpace& space, Grid& grid,
                   const ExecOptions& options = {});

/// Executes a remainder-mode group: every nest shares the same plain
/// time loop, and the group runs time-step-interleaved (each step runs
/// every nest's spatial portion before the step advances).
ExecReport execute_group(std::span<const LoopNest> nests,
                         const StencilSpec& spec, const IterationSpace& space,
                         Grid& grid, const ExecOptions& options = {});

/// True iff the last compare_levels logical time levels are bit-identical
/// over the interior. Throws Error on a spatial shape mismatch or when a
/// grid no longer retains the requested levels.
bool verify_bitwise(const Grid& a, const Grid& b, std::int64_t compare_levels);

}  // namespace tiler
