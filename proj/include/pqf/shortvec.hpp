#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pqf/rational.hpp"

namespace pqf {

/// Completed-square decomposition of a positive-definite symmetric rational
/// matrix: Q(x) = sum_i diag[i] * (x_i + sum_{j>i} coef[i][j] x_j)^2.
struct Ldlt {
  RatVec diag;
  RatMat coef;
};

/// nullopt iff g is not positive-definite (pivot <= 0 encountered).
std::optional<Ldlt> ldlt(const RatMat& g);

/// Minimum and minimal vectors of a positive-definite rational Gram.
struct MinimalData {
  Rat minimum;
  std::vector<IntVec> vectors;  // one per {v,-v}, first nonzero coord > 0,
                                // sorted lexicographically
};

/// Exact shortest-vector data via Fincke-Pohst enumeration with dynamic
/// bound shrinking; initial bound is the best diagonal entry.
/// Throws std::domain_error when g is not positive-definite.
MinimalData minimal_vectors(const RatMat& g);

/// All nonzero vectors (mod sign, canonical representatives) with value
/// <= bound, with their values, sorted lexicographically.
std::vector<std::pair<IntVec, Rat>> vectors_below(const RatMat& g,
                                                  const Rat& bound);

/// Exhaustive reference search over the box |x_i| <= box; same output
/// contract as minimal_vectors.  Correct only when the box provably
/// contains all minimal vectors (see certified_box_radius).
MinimalData brute_force_minimal_vectors(const RatMat& g, long box);

/// Smallest box radius certified to contain every vector of value <= bound:
/// coordinates of such vectors satisfy x_i^2 <= bound * (g^{-1})_ii.
long certified_box_radius(const RatMat& g, const Rat& bound);

Rat gram_value(const RatMat& g, const IntVec& x);
IntVec canonical_sign_rep(IntVec v);

}  // namespace pqf
