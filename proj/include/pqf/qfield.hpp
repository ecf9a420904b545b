#pragma once

#include <string>

#include "pqf/rational.hpp"

namespace pqf {

/// A real quadratic field Q(sqrt(d)) with ring of integers Z[w], where
/// w = (1+sqrt(d))/2 when d = 1 mod 4 and w = sqrt(d) otherwise; or the
/// degenerate rational field (degree 1) used for cross-validation.
struct Field {
  bool rational_mode = false;
  long d = 0;     // square-free, >= 2 (unused in rational mode)
  bool half = false;  // true iff d = 1 mod 4
  long D = 0;     // discriminant: d if half, else 4d

  static Field rationals();
  static Field quadratic(long d);  // throws std::domain_error if d invalid

  int degree() const { return rational_mode ? 1 : 2; }
  /// Tr(w): 1 in the half-integer case, 0 in the sqrt case.
  long omega_trace() const { return half ? 1 : 0; }

  friend bool operator==(const Field& x, const Field& y) {
    return x.rational_mode == y.rational_mode && x.d == y.d;
  }
};

bool is_square_free(long d);

/// Element a + b*w of F in the fixed integral basis {1, w}.
/// In rational mode b is identically zero.
struct FElem {
  Field fld;
  Rat a;
  Rat b;

  FElem() : a(0), b(0) {}
  FElem(const Field& f, Rat a_, Rat b_ = Rat(0));

  static FElem omega(const Field& f);
  static FElem from_rat(const Field& f, const Rat& r) { return FElem(f, r); }
  /// Builds p + q*sqrt(d) in {1, w} coordinates.
  static FElem from_sqrt_coords(const Field& f, const Rat& p, const Rat& q);

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool is_integral() const;

  FElem conj() const;
  Rat trace() const;
  Rat norm() const;
  bool is_unit() const;

  /// Coordinates (p, q) with value p + q*sqrt(d); q = 0 in rational mode.
  std::pair<Rat, Rat> sqrt_coords() const;
  /// Exact sign (-1, 0, +1) under the embedding sending w to the positive
  /// root; conjugate first for the other embedding.
  int sign() const;
  bool totally_positive() const;

  std::string str() const;

  friend FElem operator+(const FElem& x, const FElem& y);
  friend FElem operator-(const FElem& x, const FElem& y);
  friend FElem operator-(const FElem& x);
  friend FElem operator*(const FElem& x, const FElem& y);
  friend FElem operator/(const FElem& x, const FElem& y);  // y != 0
  friend bool operator==(const FElem& x, const FElem& y);
  friend bool operator!=(const FElem& x, const FElem& y) { return !(x == y); }

  FElem& operator+=(const FElem& y) { return *this = *this + y; }
  FElem& operator-=(const FElem& y) { return *this = *this - y; }
  FElem& operator*=(const FElem& y) { return *this = *this * y; }
};

FElem operator*(const Rat& c, const FElem& x);

/// Exact sign of p + q*sqrt(d) for rationals p, q and square-free d >= 2.
int sign_p_plus_q_sqrt(const Rat& p, const Rat& q, long d);

}  // namespace pqf
