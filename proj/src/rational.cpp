#include "pqf/rational.hpp"

#include <stdexcept>

namespace pqf {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int floor_plus_sqrt(const Rat& c, const Rat& radicand) {
  if (radicand < 0) throw std::domain_error("negative radicand");
  // floor(c + sqrt(B)): start from floor(c) + floor(sqrt(floor(B))) and
  // correct by exact comparisons (t - c)^2 vs B, mindful of sign of t - c.
  Int approx_root;
  Int floor_B = floor_rat(radicand);
  mpz_sqrt(approx_root.get_mpz_t(), floor_B.get_mpz_t());
  Int t = floor_rat(c) + approx_root;

  auto le_bound = [&](const Int& cand) {
    // cand <= c + sqrt(B)  <=>  cand - c <= sqrt(B)
    Rat diff = Rat(cand) - c;
    if (diff <= 0) return true;
    return diff * diff <= radicand;
  };

  while (!le_bound(t)) --t;
  while (le_bound(t + 1)) ++t;
  return t;
}

int rat_rank(const RatMat& rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Int>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    Int lcm = 1;
    for (const auto& x : row)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> irow;
    irow.reserve(ncols);
    for (const auto& x : row) irow.push_back(Int(x.get_num() * (lcm / x.get_den())));
    m.push_back(std::move(irow));
  }

  // Bareiss fraction-free elimination.
  const size_t nrows = m.size();
  size_t rank = 0;
  Int prev_pivot = 1;
  for (size_t col = 0; col < ncols && rank < nrows; ++col) {
    size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t r = rank + 1; r < nrows; ++r) {
      for (size_t c2 = col + 1; c2 < ncols; ++c2) {
        Int num = m[rank][col] * m[r][c2] - m[r][col] * m[rank][c2];
        mpz_divexact(m[r][c2].get_mpz_t(), num.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<RatMat> rat_inverse(const RatMat& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("non-square matrix");

  // Gauss-Jordan on [m | I] with exact rationals.
  RatMat a = m;
  RatMat inv(n, RatVec(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rat p = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat factor = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<RatVec> rat_kernel(const RatMat& rows) {
  if (rows.empty()) return {};
  const size_t ncols = rows[0].size();
  RatMat a = rows;

  // reduced row echelon form
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < a.size(); ++c) {
    size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    Rat p = a[r][c];
    for (size_t j = 0; j < ncols; ++j) a[r][j] /= p;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(ncols, Rat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -a[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pqf
