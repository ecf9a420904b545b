#pragma once

#include <vector>

#include "pqf/qfield.hpp"
#include "pqf/rational.hpp"

namespace pqf {

using FVec = std::vector<FElem>;   // vector in F^n
using FMat = std::vector<FVec>;    // matrix over F

/// Symmetric n x n matrix (a_ij) over F, evaluated on integral vectors as
/// Tr(sum_{i,j} a_ij v_i v_j) with both orders of each off-diagonal pair
/// counted, so the bilinear companion needs no extra factors.
struct FormOverF {
  Field fld;
  int n = 0;
  FMat entries;

  FormOverF() = default;
  FormOverF(const Field& f, int n_);  // zero form

  const FElem& at(int i, int j) const { return entries[i][j]; }
  void set(int i, int j, const FElem& x);  // keeps symmetry

  friend bool operator==(const FormOverF& x, const FormOverF& y) {
    return x.fld == y.fld && x.n == y.n && x.entries == y.entries;
  }
};

FormOverF operator+(const FormOverF& x, const FormOverF& y);
FormOverF operator*(const Rat& c, const FormOverF& f);

/// Coordinate space of symmetric F-matrices: for each index pair i <= j in
/// lexicographic order, the {1, w} coordinates of that entry.  Dimension is
/// m*n*(n+1)/2.  All coordinate vectors in a run share this fixed order.
struct SymBasis {
  Field fld;
  int n = 0;

  SymBasis() = default;
  SymBasis(const Field& f, int n_) : fld(f), n(n_) {}

  int m() const { return fld.degree(); }
  int dim() const { return m() * n * (n + 1) / 2; }
  int pair_count() const { return n * (n + 1) / 2; }
  /// Flat index of (pair (i,j) with i <= j, basis coordinate k).
  int index(int i, int j, int k) const;

  RatVec coords(const FormOverF& f) const;
  FormOverF form(const RatVec& x) const;
  /// c(v) with evaluate(f, v) = dot(c(v), coords(f)) for every form f;
  /// v integral and nonzero, given in O^n (as FElem entries).
  RatVec evaluation_vector(const FVec& v) const;
};

/// Value Tr(sum a_ij v_i v_j); v must be integral.
Rat evaluate(const FormOverF& f, const FVec& v);
/// Bilinear companion Tr(sum a_ij v_i w_j); symmetric in (v, w).
Rat evaluate_bilinear(const FormOverF& f, const FVec& v, const FVec& w);

/// The nm x nm rational Gram of f on Z^{nm} via O^n ~ Z^{nm}: flat
/// coordinate k*n + i holds the w_k-coordinate of slot i, and
/// G[k*n+i][l*n+j] = Tr(a_ij w_k w_l).
RatMat restriction_of_scalars(const FormOverF& f);

/// Z^{nm} coordinates of an integral O^n vector (index k*n + i), and back.
IntVec flatten_vector(const Field& f, const FVec& v);
FVec unflatten_vector(const Field& f, int n, const IntVec& x);

/// phi_alpha: the unary form (alpha) over F; Gram [[Tr(alpha w_i w_j)]].
FormOverF scaled_trace_form(const FElem& alpha);

/// n-ary form with a_ii = alpha, a_ij = alpha/2 (i != j); its Gram is the
/// tensor of the unary Gram of alpha with [[1,1/2],[1/2,1],...] (A_n).
FormOverF tensor_with_an(const FElem& alpha, int n);

/// Exact test; decided both through embedding-wise leading principal minors
/// over F and through the rational Gram's leading principal minors.  The two
/// routes are cross-checked and must agree.
bool is_positive_definite(const FormOverF& f);
/// Leading-principal-minor test on a symmetric rational matrix.
bool gram_is_positive_definite(const RatMat& g);

/// Change of variables: the form x -> f(Ux), i.e. entries U^T A U.
FormOverF transform(const FormOverF& f, const FMat& u);
/// Entrywise Galois conjugate.
FormOverF conj_form(const FormOverF& f);

FMat fmat_mul(const FMat& x, const FMat& y);
FMat fmat_transpose(const FMat& x);
FElem fmat_det2(const FMat& x);  // 2x2 determinant
/// Inverse of a 2x2 matrix over F; throws std::domain_error when singular.
FMat fmat_inverse2(const FMat& x);

}  // namespace pqf
