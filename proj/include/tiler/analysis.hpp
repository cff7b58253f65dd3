#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tiler/stencil.hpp"

namespace tiler {

enum class BoundaryCase { Empty, F1Only, Multi };

std::string to_string(BoundaryCase c);

/// Tile-face geometry: per-dimension face sizes F_i (elements, already
/// scaled by the time tile), the per-dimension boundary fractions
/// |B_i| / prod(D), their union, and which bounding case applied.
struct FaceAnalysis {
  std::vector<std::int64_t> face_sizes;  // F_i
  std::vector<double> boundary_fracs;    // clamped to [0, 1]
  double union_frac = 0.0;
  BoundaryCase bcase = BoundaryCase::Empty;
  int critical_dim = 0;  // i* (1-based); 0 when no face reaches the cache size
};

/// Arithmetic-intensity estimates, flops/byte. ai_naive_tt is the
/// spatial estimate scaled by the time tile; ai_tight_tt divides it by
/// 1 + union_frac.
struct IntensityEstimate {
  std::int64_t flops_per_point = 0;
  double bytes_per_point = 0.0;  // (delta_t + 1) * 4, per point per step
  double ai_spatial = 0.0;
  double ai_naive_tt = 0.0;
  double ai_tight_tt = 0.0;
  double divisor = 1.0;  // 1 + union_frac
};

/// Compulsory-traffic AI per point: delta_t levels read plus one level
/// written, 4 bytes each.
double ai_spatial(const StencilSpec& spec);

/// The spatial estimate scaled by the time tile size.
double ai_naive_tt(const StencilSpec& spec, std::int64_t time_tile);
double naive_from_spatial(double ai_spatial, std::int64_t time_tile);

/// F_i = t_t * 2 * (prod_{j<i} t_j) * delta_i * (prod_{k>i} D_k), in
/// elements, for the fixed loop order d_1 outer .. d_n inner.
std::vector<std::int64_t> face_sizes(const StencilSpec& spec,
                                     const IterationSpace& space,
                                     const TilePlan& plan);

/// frac_i = min(1, 2 * (delta_i / D_i) * floor(D_i / t_i)).
std::vector<double> boundary_fracs(const StencilSpec& spec,
                                   const IterationSpace& space,
                                   const TilePlan& plan);

/// Union of boundary fractions under the proportional-distribution
/// assumption: 1 - prod(1 - f_j). With two inputs this is exactly the
/// pairwise inclusion-exclusion form.
double union_frac(std::span<const double> fracs);

struct TightBoundResult {
  IntensityEstimate estimate;
  FaceAnalysis faces;
};

/// The face-boundary bound. i* is the largest i with F_i >= cache_elems.
/// No such i: B is empty and the tight estimate equals the naive one.
/// i* = 1: |B| = (F_1 - cache_elems) * floor(D_1 / t_1), consolidated.
/// i* >= 2: B = B_1 u .. u B_{i*-1}. Either way the naive estimate is
/// divided by 1 + |B| / prod(D).
TightBoundResult tight_bound(const StencilSpec& spec,
                             const IterationSpace& space, const TilePlan& plan,
                             std::int64_t cache_elems);

/// min(peak, bandwidth * ai), GFlop/s.
double roofline_bound(const MachineProfile& profile, double ai);

/// The arithmetic intensity where the bandwidth ramp meets the compute
/// ceiling.
double ridge_point(const MachineProfile& profile);

}  // namespace tiler
