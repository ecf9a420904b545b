#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pqf {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<long>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num" or "num/den" with arbitrary-precision parts. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

/// Canonical decimal rendering ("3", "-1/5"); inverse of parse_rat.
std::string rat_str(const Rat& r);

Int floor_rat(const Rat& r);

/// Largest integer t with t <= c + sqrt(radicand); radicand >= 0.
/// Entirely in integer arithmetic, no rounding anywhere.
Int floor_plus_sqrt(const Rat& c, const Rat& radicand);

/// Rank over Q. Rows are cleared of denominators, then eliminated
/// fraction-free (Bareiss) in integer arithmetic.
int rat_rank(const RatMat& rows);

/// Inverse of a square rational matrix, or nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& m);

/// Basis of {x : rows * x = 0} over Q.
std::vector<RatVec> rat_kernel(const RatMat& rows);

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace pqf
