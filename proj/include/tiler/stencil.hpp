#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiler {

/// Base type for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure in a stencil spec file; carries the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The discretised problem domain: D_t time steps over a hyperrectangle
/// of spatial extents D_1..D_n. Immutable after construction.
struct IterationSpace {
  std::int64_t time_steps = 1;        // D_t
  std::vector<std::int64_t> extents;  // D_1..D_n

  int ndims() const { return static_cast<int>(extents.size()); }
  std::int64_t points_per_step() const {
    std::int64_t p = 1;
    for (auto e : extents) p *= e;
    return p;
  }
};

/// One read of the stencil: coeff * A[t - dt][x_1 + offsets[0]]...
/// dt >= 1: reads reference strictly earlier time levels only.
struct StencilTerm {
  float coeff = 0.0f;
  int dt = 1;
  std::vector<int> offsets;  // one per spatial dimension
};

/// An update rule A[t][x..] = sum_k coeff_k * A[t - dt_k][x + off_k..].
/// Term order is the spec-file order and is an evaluation-order contract.
struct StencilSpec {
  std::string name;
  int ndims = 0;
  std::vector<StencilTerm> terms;
  int time_depth = 1;      // delta_t = max dt over terms
  std::vector<int> radii;  // delta_i = max |offsets[i]| over terms

  /// Derives time_depth and radii from the term list; throws Error on a
  /// violated invariant (no terms, dt < 1, offset arity mismatch).
  static StencilSpec make(std::string name, int ndims,
                          std::vector<StencilTerm> terms);
};

/// Tiling parameters: skew factor s, time tile t_t, spatial tiles t_i.
struct TilePlan {
  int skew = 0;
  std::int64_t time_tile = 1;
  std::vector<std::int64_t> space_tiles;
};

/// Machine characteristics consumed by the roofline model and the
/// cache-footprint analyses. cache_elems is the cache size in float32
/// elements (the analyses reason in elements, the roofline in bytes).
struct MachineProfile {
  double peak_gflops = 0.0;
  double bandwidth_gbs = 0.0;
  std::int64_t cache_elems = 1;
  int elem_bytes = 4;  // float32 everywhere
};

struct ParsedStencil {
  StencilSpec spec;
  IterationSpace space;
};

/// Parses the line-oriented stencil spec format:
///
///   stencil <identifier>
///   dims <n>
///   extent <D_1> ... <D_n>
///   steps <D_t>
///   term <coeff> <dt> <off_1> ... <off_n>     (one or more)
///
/// '#' starts a comment; tokens are whitespace-separated. Throws
/// ParseError with the offending line number.
ParsedStencil parse_spec(std::string_view text);

/// Minimum legal skew factor: the maximum spatial dependence distance.
int min_skew_factor(const StencilSpec& spec);

/// Time-buffer depth needed to run a time tile of size time_tile:
/// delta_t levels of dependency history plus the time_tile levels in
/// flight. time_tile = 1 is the spatial-tiling storage rule.
std::int64_t time_buffer_slots(const StencilSpec& spec, std::int64_t time_tile);

/// Flops per grid point update: k multiplies and k-1 adds.
std::int64_t flops_per_point(const StencilSpec& spec);

}  // namespace tiler
