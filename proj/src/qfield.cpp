#include "pqf/qfield.hpp"

#include <stdexcept>

namespace pqf {

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

Field Field::rationals() {
  Field f;
  f.rational_mode = true;
  return f;
}

Field Field::quadratic(long d) {
  if (d < 2 || !is_square_free(d))
    throw std::domain_error("d must be square-free and >= 2: " +
                            std::to_string(d));
  Field f;
  f.d = d;
  f.half = (d % 4 == 1);
  f.D = f.half ? d : 4 * d;
  return f;
}

FElem::FElem(const Field& f, Rat a_, Rat b_)
    : fld(f), a(std::move(a_)), b(std::move(b_)) {
  // mpq comparisons assume canonical form; normalize caller-built values
  a.canonicalize();
  b.canonicalize();
  if (fld.rational_mode && b != 0)
    throw std::domain_error("rational mode admits no omega part");
}

FElem FElem::omega(const Field& f) {
  if (f.rational_mode) throw std::domain_error("no omega in rational mode");
  return FElem(f, 0, 1);
}

FElem FElem::from_sqrt_coords(const Field& f, const Rat& p, const Rat& q) {
  if (f.rational_mode) {
    if (q != 0) throw std::domain_error("rational mode admits no sqrt part");
    return FElem(f, p);
  }
  // half: p + q*sqrt(d) = (p - q) + 2q * (1+sqrt(d))/2
  if (f.half) return FElem(f, p - q, 2 * q);
  return FElem(f, p, q);
}

bool FElem::is_integral() const {
  return a.get_den() == 1 && b.get_den() == 1;
}

FElem FElem::conj() const {
  if (fld.rational_mode) return *this;
  // half: conj(w) = 1 - w; sqrt: conj(w) = -w.
  if (fld.half) return FElem(fld, a + b, -b);
  return FElem(fld, a, -b);
}

Rat FElem::trace() const {
  if (fld.rational_mode) return a;
  return 2 * a + Rat(fld.omega_trace()) * b;
}

Rat FElem::norm() const {
  if (fld.rational_mode) return a;
  FElem n = *this * conj();
  if (n.b != 0) throw std::logic_error("norm not rational");
  return n.a;
}

bool FElem::is_unit() const {
  if (!is_integral()) return false;
  Rat n = norm();
  return n == 1 || n == -1;
}

std::pair<Rat, Rat> FElem::sqrt_coords() const {
  if (fld.rational_mode) return {a, Rat(0)};
  // half: a + b(1+sqrt d)/2 = (a + b/2) + (b/2) sqrt d.
  if (fld.half) return {a + b / 2, b / 2};
  return {a, b};
}

int sign_p_plus_q_sqrt(const Rat& p, const Rat& q, long d) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 with q^2 d; the larger magnitude wins.
  Rat p2 = p * p, q2d = q * q * d;
  int c = cmp(p2, q2d);
  if (c == 0) return 0;  // impossible for square-free d >= 2 and q != 0
  return c > 0 ? sp : sq;
}

int FElem::sign() const {
  if (fld.rational_mode) return sgn(a);
  auto [p, q] = sqrt_coords();
  return sign_p_plus_q_sqrt(p, q, fld.d);
}

bool FElem::totally_positive() const {
  if (fld.rational_mode) return a > 0;
  return sign() > 0 && conj().sign() > 0;
}

std::string FElem::str() const {
  if (fld.rational_mode || b == 0) return rat_str(a);
  return rat_str(a) + " + " + rat_str(b) + "*w";
}

static void require_same_field(const FElem& x, const FElem& y) {
  if (!(x.fld == y.fld)) throw std::domain_error("mixed fields");
}

FElem operator+(const FElem& x, const FElem& y) {
  require_same_field(x, y);
  return FElem(x.fld, x.a + y.a, x.b + y.b);
}

FElem operator-(const FElem& x, const FElem& y) {
  require_same_field(x, y);
  return FElem(x.fld, x.a - y.a, x.b - y.b);
}

FElem operator-(const FElem& x) { return FElem(x.fld, -x.a, -x.b); }

FElem operator*(const FElem& x, const FElem& y) {
  require_same_field(x, y);
  if (x.fld.rational_mode) return FElem(x.fld, x.a * y.a);
  Rat cross = x.a * y.b + x.b * y.a;
  Rat bb = x.b * y.b;
  // half: w^2 = w + (d-1)/4; sqrt: w^2 = d.
  if (x.fld.half)
    return FElem(x.fld, x.a * y.a + bb * Rat((x.fld.d - 1) / 4), cross + bb);
  return FElem(x.fld, x.a * y.a + bb * Rat(x.fld.d), cross);
}

FElem operator/(const FElem& x, const FElem& y) {
  require_same_field(x, y);
  if (y.is_zero()) throw std::domain_error("division by zero field element");
  if (x.fld.rational_mode) return FElem(x.fld, x.a / y.a);
  FElem num = x * y.conj();
  Rat n = y.norm();
  return FElem(x.fld, num.a / n, num.b / n);
}

bool operator==(const FElem& x, const FElem& y) {
  return x.fld == y.fld && x.a == y.a && x.b == y.b;
}

FElem operator*(const Rat& c, const FElem& x) {
  return FElem(x.fld, c * x.a, c * x.b);
}

}  // namespace pqf
