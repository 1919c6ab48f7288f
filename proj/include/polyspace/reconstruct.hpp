#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyspace/polygon.hpp"
#include "polyspace/random.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

/// Side lengths alpha_1..alpha_m and free diagonals d_2..d_{m-2}.
/// The remaining diagonals are fixed: d_0 = d_m = 0, d_1 = alpha_1, d_{m-1} = alpha_m.
struct LDPoint {
  std::vector<double> alpha;
  std::vector<double> delta;
};

struct ExactLDPoint {
  RationalVector alpha;
  RationalVector delta;

  LDPoint to_double() const;
};

/// d_1..d_m, with the fixed entries filled in. Throws InvalidArgument on a size mismatch.
std::vector<double> full_diagonals(const LDPoint& ld);
RationalVector full_diagonals(const ExactLDPoint& ld);

/// First violated triangle inequality as (triangle i, inequality kind), with the
/// numbering of gc_membership. Floats use slack >= -tol * max(1, sum alpha).
std::optional<std::pair<int, int>> first_violation(const LDPoint& ld, double tol = 1e-9);
std::optional<std::pair<int, int>> first_violation(const ExactLDPoint& ld);

/// Vertex-by-vertex polygon with these side lengths and diagonals, in the e1-e2
/// plane (dim k, k in {2, 3}). Throws TriangleViolation with the triangle index.
Polygon reconstruct(const LDPoint& ld, int k);
/// Exact membership test, then the floating-point construction.
Polygon reconstruct(const ExactLDPoint& ld, int k);

/// reconstruct(ld, 3) followed by bend(., i, angles[i - 2]) for i = 2..m-2.
/// Throws TriangleViolation, ZeroDiagonal.
Polygon fiber_sample(const LDPoint& ld, const std::vector<double>& angles);

/// Planar polygon with side lengths alpha, for alpha in the hypersimplex.
/// Throws NotInHypersimplex.
Polygon section_sigma(const RationalVector& alpha);

/// `count` polygons with side lengths alpha: free diagonals uniform over the bounding
/// box of diag_slice(alpha) with rejection, then uniform fiber angles (k = 3) or
/// uniform flips (k = 2). Sample j uses the stream derive_seed(seed, j).
/// Throws EmptyPolytope (also when the slice has empty interior).
std::vector<Polygon> sample_moduli(const RationalVector& alpha, int k, int count, std::uint64_t seed);

/// Random exact point of the Gel'fand-Cetlin polytope with m sides: side lengths
/// n/denominator with n in 1..denominator, diagonals chosen one at a time inside
/// the set that can still be closed up.
ExactLDPoint random_exact_ld(int m, Rng& rng, int denominator = 64);

}  // namespace polyspace
