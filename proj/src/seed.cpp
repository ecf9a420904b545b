#include "pqf/seed.hpp"

#include <stdexcept>

#include "pqf/perfection.hpp"

namespace pqf {

Rat X_of_n(long d, long n) {
  if (d % 4 == 1) return rat(4 * n * n + d - 5, 4 + 8 * n);
  if (n == 0)
    throw std::domain_error("X(0) undefined when d is not 1 mod 4");
  return rat(n * n + d - 1, 2 * n);
}

SeedData initial_alpha(const Field& fld) {
  if (fld.rational_mode)
    throw std::domain_error("no seed element in rational mode");
  const long d = fld.d;
  const long range = d + 2;

  // |X| grows monotonically beyond the scan window; certify the derivative
  // sign at the boundary exactly rather than assuming it.
  if (fld.half) {
    if (!(4 * range * range + 4 * range + 5 > d))
      throw std::logic_error("scan window certificate failed");
  } else {
    if (!(range * range > d - 1))
      throw std::logic_error("scan window certificate failed");
  }

  bool have = false;
  Rat x0;
  for (long n = -range; n <= range; ++n) {
    if (!fld.half && n == 0) continue;
    Rat v = abs(X_of_n(d, n));
    if (!have || v < x0) {
      x0 = v;
      have = true;
    }
  }

  // The minimum is always attained with X(n) = +x0 at some n >= 0: for
  // d = 1 mod 4 the negative side gives strictly larger |X| at matching
  // |n|, and otherwise X is odd.  A miss here would mean that reasoning
  // broke down, so fail loudly instead of guessing.
  long n_tilde = -1;
  for (long n = 0; n <= range; ++n) {
    if (!fld.half && n == 0) continue;
    if (X_of_n(d, n) == x0) {
      n_tilde = n;
      break;
    }
  }
  if (n_tilde < 0)
    throw std::logic_error(
        "no non-negative integer attains the crenellation minimum; "
        "reflection fallback should be unreachable for quadratic fields");

  SeedData s;
  s.fld = fld;
  s.x0 = x0;
  s.n_tilde = n_tilde;
  // half: alpha = (d - (2 x0 + 1) sqrt(d)) / (2d); else (d - x0 sqrt(d)) / (2d)
  Rat q = fld.half ? Rat(-(2 * x0 + 1) / Rat(2 * d)) : Rat(-x0 / Rat(2 * d));
  s.alpha = FElem::from_sqrt_coords(fld, Rat(1, 2), q);
  s.eta = FElem(fld, Rat(n_tilde), Rat(1));
  s.geodesic_tag = fld.half ? "(x+1/2)^2 + y^2 = d/4" : "x^2 + y^2 = d";

  if (!s.alpha.totally_positive())
    throw std::logic_error("seed alpha is not totally positive");
  if (!((s.x0 - n_tilde) * (s.x0 - n_tilde) <= 1))
    throw std::logic_error("crenellation point misses the unit circle");
  return s;
}

std::pair<RatMat, MinimalData> seed_trace_form(const Field& fld) {
  SeedData s = initial_alpha(fld);
  FormOverF phi = scaled_trace_form(s.alpha);
  RatMat gram = restriction_of_scalars(phi);
  MinimalData md = minimal_vectors(gram);

  FElem one(fld, 1);
  Rat at_one = evaluate(phi, {one});
  Rat at_eta = evaluate(phi, {s.eta});
  if (at_one != md.minimum || at_eta != md.minimum)
    throw std::logic_error("1 and eta do not attain the seed minimum");
  auto holds = [&](const IntVec& v) {
    for (const auto& w : md.vectors)
      if (w == v) return true;
    return false;
  };
  if (!holds(canonical_sign_rep({1, 0})) ||
      !holds(canonical_sign_rep({s.n_tilde, 1})))
    throw std::logic_error("seed minimal vectors missing 1 or eta");
  return {std::move(gram), std::move(md)};
}

FormOverF initial_perfect_form(const Field& fld, int n) {
  FElem alpha = fld.rational_mode ? FElem(fld, 1) : initial_alpha(fld).alpha;
  FormOverF f = tensor_with_an(alpha, n);
  if (n == 1) return f;
  if (!is_positive_definite(f))
    throw std::logic_error("starting form is not positive-definite");
  MinimalData md = minimal_vectors(restriction_of_scalars(f));
  PerfectionReport rep = perfection_report(f, md);
  if (!rep.is_perfect)
    throw std::logic_error("starting form failed the perfection test");
  return f;
}

}  // namespace pqf
