#pragma once

#include <string>

#include "pqf/formspace.hpp"
#include "pqf/shortvec.hpp"

namespace pqf {

/// Data behind the starting form for Q(sqrt(d)): the crenellation minimum
/// x0 = min_n |X(n)|, the witness integer n_tilde, the scaling element
/// alpha (totally positive), and eta = n_tilde + w, the second minimal
/// vector of the unary scaled trace form.
struct SeedData {
  Field fld;
  FElem alpha;
  long n_tilde = 0;
  FElem eta;
  Rat x0;
  std::string geodesic_tag;  // which circle the construction intersects
};

/// The crenellation abscissa: (4n^2+d-5)/(4+8n) when d = 1 mod 4, else
/// (n^2+d-1)/(2n).  n = 0 in the latter branch is a domain error.
Rat X_of_n(long d, long n);

/// Scans |n| <= d+2 for min |X(n)| (growth beyond the scan window is
/// certified exactly) and assembles alpha and eta.  Rational mode is a
/// domain error.
SeedData initial_alpha(const Field& fld);

/// The 2x2 rational Gram [[Tr(alpha w_i w_j)]] of the unary form, together
/// with its independently computed minimal data.  Confirms that 1 and eta
/// attain the minimum; aborts loudly otherwise.
std::pair<RatMat, MinimalData> seed_trace_form(const Field& fld);

/// The n-ary starting form: alpha tensored against the A_n pattern.
/// Verified perfect (full reconstruction rank) before being returned; in
/// rational mode returns A_n itself.  n = 1 returns the unary form.
FormOverF initial_perfect_form(const Field& fld, int n);

}  // namespace pqf
