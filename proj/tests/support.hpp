#pragma once

// Shared helpers for the test binaries: a fixed-seed RNG whose sampling is
// implementation-independent, random generators for Grams / cones / change
// of basis matrices, and the brute-force facet oracle.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pqf/formspace.hpp"
#include "pqf/polyhedra.hpp"
#include "pqf/qfield.hpp"
#include "pqf/rational.hpp"

namespace pqftest {

using namespace pqf;

class TestRng {
 public:
  explicit TestRng(unsigned long long seed) : eng_(seed) {}
  /// Uniform-ish integer in [lo, hi]; avoids std::uniform_int_distribution
  /// so streams are identical across standard libraries.
  long pick(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<unsigned long long>(
                                              hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

/// Integral positive-definite Gram A^T A from a nonsingular integer A with
/// entries in [-2, 2]; regenerates until the certified search box for the
/// brute-force oracle is small.
inline RatMat random_pd_gram(TestRng& rng, int dim) {
  while (true) {
    std::vector<std::vector<long>> a(dim, std::vector<long>(dim));
    for (auto& row : a)
      for (auto& x : row) x = rng.pick(-2, 2);
    RatMat am(dim, RatVec(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) am[i][j] = Rat(a[i][j]);
    if (rat_rank(am) != dim) continue;
    RatMat g(dim, RatVec(dim, Rat(0)));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        long s = 0;
        for (int k = 0; k < dim; ++k) s += a[k][i] * a[k][j];
        g[i][j] = Rat(s);
      }
    // keep the oracle box affordable
    auto inv = rat_inverse(g);
    Rat start = g[0][0];
    for (int i = 1; i < dim; ++i) start = std::min(start, g[i][i]);
    bool small = true;
    for (int i = 0; i < dim && small; ++i)
      small = (start * (*inv)[i][i] <= 36);
    if (small) return g;
  }
}

/// Full-dimensional pointed cone with small integer generators; pointedness
/// is enforced by requiring a strictly positive witness functional.
inline Cone random_pointed_cone(TestRng& rng, int dim, int ngen) {
  while (true) {
    Cone c;
    c.ambient_dim = dim;
    for (int i = 0; i < ngen; ++i) {
      RatVec g(dim);
      bool zero = true;
      for (auto& x : g) {
        long v = rng.pick(-4, 4);
        x = Rat(v);
        zero = zero && v == 0;
      }
      if (zero) g[0] = 1;
      c.generators.push_back(std::move(g));
    }
    RatMat rows = c.generators;
    if (rat_rank(rows) != dim) continue;
    bool pointed = false;
    for (int attempt = 0; attempt < 200 && !pointed; ++attempt) {
      RatVec w(dim);
      for (auto& x : w) x = Rat(rng.pick(-6, 6));
      bool strict = true;
      for (const auto& g : c.generators) strict = strict && dot(w, g) > 0;
      pointed = strict;
    }
    if (pointed) return c;
  }
}

/// Brute-force dual description: for every (dim-1)-subset of generators of
/// full facet rank, the kernel direction is a facet normal iff all
/// generators lie weakly on one side.
inline std::vector<Facet> facet_oracle(const Cone& cone) {
  const int dim = cone.ambient_dim;
  const int ng = static_cast<int>(cone.generators.size());
  std::set<std::vector<std::string>> seen;
  std::vector<Facet> facets;

  std::vector<int> subset(dim - 1);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == dim - 1) {
      RatMat rows;
      for (int i : subset) rows.push_back(cone.generators[i]);
      if (rat_rank(rows) != dim - 1) return;
      auto kern = rat_kernel(rows);
      if (kern.size() != 1) return;
      RatVec nrm = primitive_direction(kern[0]);
      bool nonneg = true, nonpos = true;
      for (const auto& g : cone.generators) {
        int s = sgn(dot(nrm, g));
        nonneg = nonneg && s >= 0;
        nonpos = nonpos && s <= 0;
      }
      if (!nonneg && !nonpos) return;
      if (nonpos)
        for (auto& x : nrm) x = -x;
      std::vector<std::string> key;
      for (const auto& x : nrm) key.push_back(rat_str(x));
      if (!seen.insert(key).second) return;
      Facet f;
      f.normal = nrm;
      for (int i = 0; i < ng; ++i)
        if (dot(nrm, cone.generators[i]) == 0) f.incident.push_back(i);
      facets.push_back(std::move(f));
      return;
    }
    for (int i = start; i <= ng - (dim - 1 - k); ++i) {
      subset[k] = i;
      rec(i + 1, k + 1);
    }
  };
  if (dim >= 2) rec(0, 0);
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return facets;
}

/// Random element of GL_2(O) as a short word in elementary matrices,
/// swaps, and sign flips.
inline FMat random_gl2(TestRng& rng, const Field& fld) {
  auto felem = [&](long a, long b) {
    return FElem(fld, Rat(a), fld.rational_mode ? Rat(0) : Rat(b));
  };
  FMat u{{felem(1, 0), felem(0, 0)}, {felem(0, 0), felem(1, 0)}};
  int steps = static_cast<int>(rng.pick(2, 6));
  for (int s = 0; s < steps; ++s) {
    FMat g;
    switch (rng.pick(0, 3)) {
      case 0: {  // upper elementary
        FElem x = felem(rng.pick(-2, 2), fld.rational_mode ? 0 : rng.pick(-1, 1));
        g = {{felem(1, 0), x}, {felem(0, 0), felem(1, 0)}};
        break;
      }
      case 1: {  // lower elementary
        FElem x = felem(rng.pick(-2, 2), fld.rational_mode ? 0 : rng.pick(-1, 1));
        g = {{felem(1, 0), felem(0, 0)}, {x, felem(1, 0)}};
        break;
      }
      case 2:  // swap
        g = {{felem(0, 0), felem(1, 0)}, {felem(1, 0), felem(0, 0)}};
        break;
      default:  // sign flip
        g = {{felem(-1, 0), felem(0, 0)}, {felem(0, 0), felem(1, 0)}};
    }
    u = fmat_mul(u, g);
  }
  return u;
}

}  // namespace pqftest
