#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiler/stencil.hpp"

namespace tiler {

/// Integer affine expression: constant + sum coeff_v * v over loop
/// variables. This is the whole bound/index vocabulary the transforms
/// need (expressions like `x_s + t` or `x_blk + x_blk_size`).
struct AffineExpr {
  std::int64_t constant = 0;
  std::map<std::string, std::int64_t> coeffs;

  static AffineExpr constant_of(std::int64_t c) { return {c, {}}; }
  static AffineExpr var(const std::string& v, std::int64_t coeff = 1) {
    AffineExpr e;
    if (coeff != 0) e.coeffs[v] = coeff;
    return e;
  }

  AffineExpr& add_const(std::int64_t c) {
    constant += c;
    return *this;
  }
  AffineExpr& add_term(const std::string& v, std::int64_t coeff) {
    auto it = coeffs.find(v);
    if (it == coeffs.end()) {
      if (coeff != 0) coeffs[v] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) coeffs.erase(it);
    }
    return *this;
  }

  bool references(const std::string& v) const { return coeffs.count(v) != 0; }
  bool is_constant() const { return coeffs.empty(); }

  bool operator==(const AffineExpr&) const = default;
};

enum class BoundKind { Single, MaxOf, MinOf };

/// A loop bound: one affine expression, or a max/min over several.
/// MaxOf appears only as a lower bound, MinOf only as an upper bound.
struct Bound {
  BoundKind kind = BoundKind::Single;
  std::vector<AffineExpr> exprs;

  static Bound single(AffineExpr e) { return {BoundKind::Single, {std::move(e)}}; }
  static Bound max_of(std::vector<AffineExpr> es) {
    return {BoundKind::MaxOf, std::move(es)};
  }
  static Bound min_of(std::vector<AffineExpr> es) {
    return {BoundKind::MinOf, std::move(es)};
  }

  bool references(const std::string& v) const {
    for (const auto& e : exprs)
      if (e.references(v)) return true;
    return false;
  }

  bool operator==(const Bound&) const = default;
};

enum class LoopKind { Plain, Tile, Incremental };

/// Axis tag for a loop: the time dimension or a spatial axis index.
inline constexpr int kTimeAxis = -1;

struct Loop {
  std::string var;
  Bound lower;  // inclusive
  Bound upper;  // exclusive
  std::int64_t step = 1;
  LoopKind kind = LoopKind::Plain;
  int axis = kTimeAxis;  // kTimeAxis or 0-based spatial axis
  bool parallel = false;
};

/// One read of the update statement, with explicit index expressions so
/// transforms can rewrite them (skewing substitutes x -> x - s*t here).
struct TermRead {
  float coeff = 0.0f;
  AffineExpr time_index;                  // t - dt
  std::vector<AffineExpr> space_indices;  // logical coordinates after de-skew
};

/// The single update statement of a perfect nest. Time indices are in
/// step coordinates (the executor maps step value to a buffered level).
/// Spatial target indices evaluate to logical (de-skewed) coordinates.
struct BodyStmt {
  AffineExpr time_index;
  std::vector<AffineExpr> space_indices;
  std::vector<TermRead> reads;  // spec term order, never reordered
};

/// A perfect loop nest, outermost first, with one update statement.
struct LoopNest {
  std::vector<Loop> loops;
  BodyStmt body;
};

/// Canonical untransformed nest: time loop [0, D_t) outermost, spatial
/// loops [0, D_i) in declaration order, everything plain and sequential.
LoopNest build_canonical_nest(const StencilSpec& spec,
                              const IterationSpace& space);

/// Structural well-formedness: variable scoping, bound-kind placement,
/// step/kind agreement, tile-step vs incremental-bound agreement, the
/// exactly-one-time-loop rule. Returns the first violation, or nullopt.
std::optional<std::string> validate(const LoopNest& nest);

/// A logical iteration point: (t, x_1..x_n), de-skewed.
using TracePoint = std::vector<std::int64_t>;

inline constexpr std::int64_t kDefaultTraceCap = 1'000'000;

/// The exact sequence of logical points the body executes, in execution
/// order. Skewed coordinates are recovered by evaluating the body's
/// target index expressions. Throws Error once cap points are exceeded.
std::vector<TracePoint> trace(const LoopNest& nest,
                              std::int64_t cap = kDefaultTraceCap);

/// C-like rendering for debugging; no stability guarantee (codegen owns
/// the stable emission).
std::string pretty(const LoopNest& nest);
std::string pretty(const AffineExpr& expr);
std::string pretty(const Bound& bound, bool lower_position);

}  // namespace tiler
