#pragma once

#include <optional>
#include <vector>

#include "tiler/loop_ir.hpp"
#include "tiler/stencil.hpp"

namespace tiler {

/// Skew every spatial loop by s: bounds gain +s*t, body spatial indices
/// gain -s*t (reads and the write). Execution order of logical points is
/// unchanged. If the nest has no time loop the input is returned as-is
/// and *no_time_loop (when given) is set.
LoopNest skew(const LoopNest& nest, int s, bool* no_time_loop = nullptr);

/// Strip-mine the plain loop on `axis` into a tile loop (step
/// tile_size, original bounds) enclosing an incremental loop bounded by
/// max(orig_lower, blk) and min(orig_upper, blk + tile_size).
/// Order-preserving. Throws Error if the target is already tiled.
LoopNest strip_mine(const LoopNest& nest, int axis, std::int64_t tile_size);

/// Swap the loops at two positions. Legal only when no bound of the loop
/// moving outward references a variable it would escape, and no loop
/// between the positions references the variable of the loop moving
/// inward. Throws Error on a bound-dependency violation.
LoopNest interchange(const LoopNest& nest, int pos_a, int pos_b);

/// Spatial tiling with min/max bounds: strip-mine every spatial
/// dimension and interchange the tile loops outward, giving loop order
/// t, x1_blk..xn_blk, x1..xn. The nest must be canonical.
LoopNest tile_space_minmax(const LoopNest& nest,
                           const std::vector<std::int64_t>& sizes);

/// Spatial tiling with remainder loops: 2^n nests with constant bounds,
/// ordered main-first (remainder-subset bitmask, dimension 1 as the low
/// bit). The main region of dimension i is [0, D_i - D_i mod t_i); a
/// remainder dimension contributes one plain loop over the leftover
/// range in place of its tile loop. The nest must be canonical.
std::vector<LoopNest> tile_space_remainder(const LoopNest& nest,
                                           const std::vector<std::int64_t>& sizes);

struct LegalityViolation {
  int skew = 0;
  int required_minimum = 0;
};

/// Time-tiling is legal iff the plan's skew factor is at least the
/// stencil's maximum spatial dependence distance.
std::optional<LegalityViolation> check_legality(const StencilSpec& spec,
                                                const TilePlan& plan);

/// Full time-tiling of a canonical nest: skew by plan.skew, strip-mine
/// time by t_t and each spatial dimension by t_i, widen the spatial tile
/// loops to the skewed extent [0, D_i + s*D_t), and interchange to loop
/// order t_blk, x1_blk..xn_blk, t, x1..xn. Parallel flags are set per
/// mark_parallel. Throws Error when check_legality fails.
LoopNest tile_time(const LoopNest& nest, const StencilSpec& spec,
                   const IterationSpace& space, const TilePlan& plan);

/// Parallel-legality marking. Time loops are never parallel. Space-tiled
/// nests: spatial tile loops parallel. Time-tiled nests: spatial tile
/// loops sequential (dependences cross space tiles), outermost
/// incremental spatial loop parallel. Canonical nests: outermost spatial
/// loop parallel. Throws Error on an unrecognized structure.
LoopNest mark_parallel(const LoopNest& nest);

}  // namespace tiler
