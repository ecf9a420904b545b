#include "pqf/shortvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace pqf {

std::optional<Ldlt> ldlt(const RatMat& g) {
  const size_t n = g.size();
  RatMat q = g;
  for (size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) return std::nullopt;
    for (size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];  // stash the undivided stage value
      q[i][j] /= q[i][i];
    }
    // undivided q_ki times divided q_il completes the square: q_ki*q_il/q_ii
    for (size_t k = i + 1; k < n; ++k)
      for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  Ldlt r;
  r.diag.reserve(n);
  r.coef.assign(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    r.diag.push_back(q[i][i]);
    for (size_t j = i + 1; j < n; ++j) r.coef[i][j] = q[i][j];
  }
  return r;
}

IntVec canonical_sign_rep(IntVec v) {
  for (long c : v) {
    if (c > 0) return v;
    if (c < 0) {
      for (long& x : v) x = -x;
      return v;
    }
  }
  return v;
}

Rat gram_value(const RatMat& g, const IntVec& x) {
  const size_t n = g.size();
  Rat s(0);
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (x[j] == 0) continue;
      s += g[i][j] * Rat(x[i]) * Rat(x[j]);
    }
  }
  return s;
}

static long int_to_long(const Int& z) {
  if (!z.fits_slong_p())
    throw std::runtime_error("enumeration coordinate out of long range");
  return z.get_si();
}

namespace {

/// Depth-first Fincke-Pohst walker; enumerates x with last nonzero
/// coordinate positive (one representative per sign pair).
struct Enumerator {
  const Ldlt& q;
  int rank;
  bool shrink;       // minimal-vector mode: tighten the bound as we go
  Rat bound;         // current value bound (dynamic when shrink)
  std::vector<std::pair<IntVec, Rat>> found;
  IntVec x;

  Enumerator(const Ldlt& q_, const Rat& b, bool shrink_)
      : q(q_), rank(static_cast<int>(q_.diag.size())), shrink(shrink_),
        bound(b), x(q_.diag.size(), 0) {}

  void run() { descend(rank - 1, Rat(0), true); }

  void descend(int i, Rat used, bool zero_above) {
    if (i < 0) {
      if (zero_above) return;  // the zero vector
      if (shrink && used < bound) {
        bound = used;
        found.clear();
      }
      found.emplace_back(x, used);
      return;
    }
    Rat budget = bound - used;
    if (budget < 0) return;
    Rat u(0);
    for (int j = i + 1; j < rank; ++j)
      if (x[j] != 0) u += q.coef[i][j] * Rat(x[j]);
    Rat tq = budget / q.diag[i];
    long hi = int_to_long(floor_plus_sqrt(-u, tq));
    long lo = zero_above ? 0 : -int_to_long(floor_plus_sqrt(u, tq));
    for (long xi = lo; xi <= hi; ++xi) {
      Rat term = q.diag[i] * (Rat(xi) + u) * (Rat(xi) + u);
      Rat next_used = used + term;
      if (next_used > bound) continue;
      x[i] = xi;
      descend(i - 1, next_used, zero_above && xi == 0);
    }
    x[i] = 0;
  }
};

}  // namespace

static std::vector<std::pair<IntVec, Rat>> enumerate_upto(const RatMat& g,
                                                          const Rat& bound,
                                                          bool shrink,
                                                          Rat* final_bound) {
  auto dec = ldlt(g);
  if (!dec) throw std::domain_error("gram matrix is not positive-definite");
  Enumerator e(*dec, bound, shrink);
  e.run();
  if (final_bound) *final_bound = e.bound;
  for (auto& [v, val] : e.found) v = canonical_sign_rep(std::move(v));
  std::sort(e.found.begin(), e.found.end());
  return std::move(e.found);
}

MinimalData minimal_vectors(const RatMat& g) {
  Rat start = g[0][0];
  for (size_t i = 1; i < g.size(); ++i) start = std::min(start, g[i][i]);
  Rat best;
  auto all = enumerate_upto(g, start, true, &best);
  MinimalData md;
  md.minimum = best;
  for (auto& [v, val] : all)
    if (val == best) md.vectors.push_back(std::move(v));
  return md;
}

std::vector<std::pair<IntVec, Rat>> vectors_below(const RatMat& g,
                                                  const Rat& bound) {
  return enumerate_upto(g, bound, false, nullptr);
}

MinimalData brute_force_minimal_vectors(const RatMat& g, long box) {
  const size_t n = g.size();
  IntVec x(n, -box);
  MinimalData md;
  bool have = false;
  while (true) {
    // consider x only when its last nonzero coordinate is positive
    int last = -1;
    for (int i = static_cast<int>(n) - 1; i >= 0; --i)
      if (x[i] != 0) {
        last = i;
        break;
      }
    if (last >= 0 && x[last] > 0) {
      Rat val = gram_value(g, x);
      if (!have || val < md.minimum) {
        md.minimum = val;
        md.vectors.clear();
        have = true;
      }
      if (val == md.minimum) md.vectors.push_back(canonical_sign_rep(x));
    }
    // odometer step
    size_t i = 0;
    while (i < n && x[i] == box) x[i++] = -box;
    if (i == n) break;
    ++x[i];
  }
  if (!have) throw std::domain_error("empty search box");
  std::sort(md.vectors.begin(), md.vectors.end());
  return md;
}

long certified_box_radius(const RatMat& g, const Rat& bound) {
  auto inv = rat_inverse(g);
  if (!inv) throw std::domain_error("singular gram matrix");
  Int r = 0;
  for (size_t i = 0; i < g.size(); ++i) {
    Int ri = floor_plus_sqrt(Rat(0), bound * (*inv)[i][i]);
    r = std::max(r, ri);
  }
  return int_to_long(r);
}

}  // namespace pqf
