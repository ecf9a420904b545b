#include "pqf/formspace.hpp"

#include <stdexcept>

namespace pqf {

FormOverF::FormOverF(const Field& f, int n_) : fld(f), n(n_) {
  if (n < 1) throw std::domain_error("form rank must be >= 1");
  entries.assign(n, FVec(n, FElem(f, 0)));
}

void FormOverF::set(int i, int j, const FElem& x) {
  entries[i][j] = x;
  entries[j][i] = x;
}

FormOverF operator+(const FormOverF& x, const FormOverF& y) {
  if (!(x.fld == y.fld) || x.n != y.n)
    throw std::domain_error("form shape mismatch");
  FormOverF r = x;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.entries[i][j] += y.entries[i][j];
  return r;
}

FormOverF operator*(const Rat& c, const FormOverF& f) {
  FormOverF r = f;
  for (auto& row : r.entries)
    for (auto& e : row) e = c * e;
  return r;
}

int SymBasis::index(int i, int j, int k) const {
  if (i > j) std::swap(i, j);
  // lexicographic rank of (i, j) among pairs with i <= j
  int pair = i * n - i * (i - 1) / 2 + (j - i);
  return pair * m() + k;
}

RatVec SymBasis::coords(const FormOverF& f) const {
  if (!(f.fld == fld) || f.n != n) throw std::domain_error("form mismatch");
  RatVec x(dim(), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const FElem& e = f.entries[i][j];
      x[index(i, j, 0)] = e.a;
      if (m() == 2) x[index(i, j, 1)] = e.b;
    }
  return x;
}

FormOverF SymBasis::form(const RatVec& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw std::domain_error("coordinate length mismatch");
  FormOverF f(fld, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat a = x[index(i, j, 0)];
      Rat b = m() == 2 ? x[index(i, j, 1)] : Rat(0);
      f.set(i, j, FElem(fld, a, b));
    }
  return f;
}

static void require_integral(const FVec& v) {
  for (const auto& e : v)
    if (!e.is_integral()) throw std::domain_error("vector not integral");
}

RatVec SymBasis::evaluation_vector(const FVec& v) const {
  if (static_cast<int>(v.size()) != n)
    throw std::domain_error("vector length mismatch");
  require_integral(v);
  bool zero = true;
  for (const auto& e : v) zero = zero && e.is_zero();
  if (zero) throw std::domain_error("zero vector has no evaluation vector");

  // evaluate(f, v) = sum_{i<=j} (2 - [i==j]) Tr(w_k v_i v_j) x_{ijk}
  RatVec c(dim(), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      FElem prod = v[i] * v[j];
      Rat mult(i == j ? 1 : 2);
      c[index(i, j, 0)] = mult * prod.trace();
      if (m() == 2) c[index(i, j, 1)] = mult * (FElem::omega(fld) * prod).trace();
    }
  return c;
}

Rat evaluate(const FormOverF& f, const FVec& v) {
  if (static_cast<int>(v.size()) != f.n)
    throw std::domain_error("vector length mismatch");
  require_integral(v);
  return evaluate_bilinear(f, v, v);
}

Rat evaluate_bilinear(const FormOverF& f, const FVec& v, const FVec& w) {
  if (static_cast<int>(v.size()) != f.n ||
      static_cast<int>(w.size()) != f.n)
    throw std::domain_error("vector length mismatch");
  FElem s(f.fld, 0);
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) s += f.entries[i][j] * v[i] * w[j];
  return s.trace();
}

RatMat restriction_of_scalars(const FormOverF& f) {
  const int n = f.n;
  const int m = f.fld.degree();
  RatMat g(n * m, RatVec(n * m, Rat(0)));
  // basis elements w_0 = 1, w_1 = w
  std::vector<FElem> w;
  w.push_back(FElem(f.fld, 1));
  if (m == 2) w.push_back(FElem::omega(f.fld));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          g[k * n + i][l * n + j] = (f.entries[i][j] * w[k] * w[l]).trace();
  return g;
}

IntVec flatten_vector(const Field& f, const FVec& v) {
  require_integral(v);
  const int n = static_cast<int>(v.size());
  const int m = f.degree();
  IntVec x(n * m, 0);
  for (int i = 0; i < n; ++i) {
    if (!v[i].a.get_num().fits_slong_p() ||
        !v[i].b.get_num().fits_slong_p())
      throw std::domain_error("vector coordinate out of range");
    x[i] = v[i].a.get_num().get_si();
    if (m == 2) x[n + i] = v[i].b.get_num().get_si();
  }
  return x;
}

FVec unflatten_vector(const Field& f, int n, const IntVec& x) {
  const int m = f.degree();
  if (static_cast<int>(x.size()) != n * m)
    throw std::domain_error("coordinate length mismatch");
  FVec v;
  v.reserve(n);
  for (int i = 0; i < n; ++i)
    v.push_back(FElem(f, Rat(x[i]), m == 2 ? Rat(x[n + i]) : Rat(0)));
  return v;
}

FormOverF scaled_trace_form(const FElem& alpha) {
  FormOverF f(alpha.fld, 1);
  f.set(0, 0, alpha);
  return f;
}

FormOverF tensor_with_an(const FElem& alpha, int n) {
  if (n < 1) throw std::domain_error("rank must be >= 1");
  FormOverF f(alpha.fld, n);
  FElem half = Rat(1, 2) * alpha;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) f.set(i, j, i == j ? alpha : half);
  return f;
}

bool gram_is_positive_definite(const RatMat& g) {
  const size_t n = g.size();
  // leading principal minors via Gaussian elimination; minor_k > 0 for all k
  RatMat a = g;
  Rat det(1);
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) {
      // pivot could still be made positive only by row swaps, which change
      // the minor sign; for symmetric matrices a zero/negative pivot with
      // positive previous minors already refutes definiteness.
      return false;
    }
    det *= a[k][k];
    for (size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      Rat factor = a[r][k] / a[k][k];
      for (size_t c = k; c < n; ++c) a[r][c] -= factor * a[k][c];
    }
  }
  return det > 0;
}

/// Determinant of the leading k x k block of an F-matrix, exactly.
static FElem leading_minor_det(const Field& fld, const FMat& a, int k) {
  FMat b(a.begin(), a.begin() + k);
  for (auto& row : b) row.resize(k, FElem(fld, 0));
  FElem det(fld, 1);
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && b[piv][col].is_zero()) ++piv;
    if (piv == k) return FElem(fld, 0);
    if (piv != col) {
      std::swap(b[piv], b[col]);
      det = -det;
    }
    det = det * b[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (b[r][col].is_zero()) continue;
      FElem factor = b[r][col] / b[col][col];
      for (int c = col; c < k; ++c) b[r][c] -= factor * b[col][c];
    }
  }
  return det;
}

bool is_positive_definite(const FormOverF& f) {
  // Route 1: all leading principal minors totally positive over F.
  bool by_minors = true;
  for (int k = 1; k <= f.n && by_minors; ++k)
    by_minors = leading_minor_det(f.fld, f.entries, k).totally_positive();
  // Route 2: the rational Gram is positive-definite.
  bool by_gram = gram_is_positive_definite(restriction_of_scalars(f));
  if (by_minors != by_gram)
    throw std::logic_error("definiteness routes disagree");
  return by_gram;
}

FormOverF transform(const FormOverF& f, const FMat& u) {
  const int n = f.n;
  if (static_cast<int>(u.size()) != n)
    throw std::domain_error("matrix size mismatch");
  FormOverF r(f.fld, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      FElem s(f.fld, 0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s += u[k][i] * f.entries[k][l] * u[l][j];
      r.set(i, j, s);
    }
  return r;
}

FormOverF conj_form(const FormOverF& f) {
  FormOverF r = f;
  for (auto& row : r.entries)
    for (auto& e : row) e = e.conj();
  return r;
}

FMat fmat_mul(const FMat& x, const FMat& y) {
  const size_t n = x.size(), p = y[0].size(), q = y.size();
  FMat r(n, FVec(p, FElem(x[0][0].fld, 0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j)
      for (size_t k = 0; k < q; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

FMat fmat_transpose(const FMat& x) {
  const size_t n = x.size(), p = x[0].size();
  FMat r(p, FVec(n, FElem(x[0][0].fld, 0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j) r[j][i] = x[i][j];
  return r;
}

FElem fmat_det2(const FMat& x) {
  if (x.size() != 2 || x[0].size() != 2 || x[1].size() != 2)
    throw std::domain_error("expected a 2x2 matrix");
  return x[0][0] * x[1][1] - x[0][1] * x[1][0];
}

FMat fmat_inverse2(const FMat& x) {
  FElem det = fmat_det2(x);
  if (det.is_zero()) throw std::domain_error("singular matrix");
  const Field& f = det.fld;
  FMat r(2, FVec(2, FElem(f, 0)));
  r[0][0] = x[1][1] / det;
  r[0][1] = -x[0][1] / det;
  r[1][0] = -x[1][0] / det;
  r[1][1] = x[0][0] / det;
  return r;
}

}  // namespace pqf
