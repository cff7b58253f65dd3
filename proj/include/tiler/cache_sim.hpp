#pragma once

#include <cstdint>
#include <span>

#include "tiler/loop_ir.hpp"
#include "tiler/stencil.hpp"

namespace tiler {

/// Fully associative LRU cache, write-allocate + write-back. Capacity
/// and line size are in float32 elements; capacity must be a multiple
/// of the line size.
struct CacheConfig {
  std::int64_t capacity_elems = 1;
  std::int64_t line_elems = 16;  // 64-byte lines; use 1 for the idealized oracle
};

struct TrafficReport {
  std::int64_t lines_loaded = 0;
  std::int64_t lines_written_back = 0;
  std::int64_t line_elems = 1;
  std::int64_t bytes = 0;  // 4 * line_elems * (loaded + written back)
  std::int64_t flops = 0;
  double measured_ai = 0.0;  // flops / bytes, when any traffic occurred
};

/// Replays the nest's exact access stream (per traced point: all term
/// reads in term order, then the write) against the LRU set, using the
/// executor's address map. A final flush of dirty lines counts as
/// write-back traffic. Throws Error once cap body points are exceeded.
TrafficReport simulate(const LoopNest& nest, const StencilSpec& spec,
                       const IterationSpace& space, const CacheConfig& cache,
                       std::int64_t cap = 1'000'000'000);

/// Remainder-group variant; replays the group time-step-interleaved,
/// matching execute_group's order.
TrafficReport simulate_group(std::span<const LoopNest> nests,
                             const StencilSpec& spec,
                             const IterationSpace& space,
                             const CacheConfig& cache,
                             std::int64_t cap = 1'000'000'000);

/// Measured arithmetic intensity from a traffic report, in flops/byte.
/// Throws Error when the report carries no traffic.
double measured_ai_elems(const TrafficReport& report);

}  // namespace tiler
