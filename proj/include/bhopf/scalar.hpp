// Exact coefficient arithmetic: Gaussian rationals and polynomials in the
// formal deformation parameter t.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bhopf {

using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Element of Q(i), stored as re + im*i with canonical GMP rationals.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws ArithmeticError on zero.
  Scalar inverse() const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Arbitrary total order (lexicographic on re, im); only for containers.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

enum class ScalarOp { add, mul, conj_first, invert_first };
Scalar scalar_op(const Scalar& a, const Scalar& b, ScalarOp op);

/// Accepts `a/b`, `a/b + c/d i`, `i`, `-i`, `2 i`, optionally parenthesized.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Univariate polynomial in t with Scalar coefficients; coeffs()[k] multiplies
/// t^k and trailing zeros are always stripped.
class TPoly {
 public:
  TPoly() = default;
  TPoly(Scalar c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }  // NOLINT
  TPoly(int c) : TPoly(Scalar(c)) {}  // NOLINT
  explicit TPoly(std::vector<Scalar> coeffs);
  TPoly(std::initializer_list<Scalar> coeffs) : TPoly(std::vector<Scalar>(coeffs)) {}

  /// The monomial c t^k.
  static TPoly monomial(Scalar c, std::size_t k);
  static TPoly t() { return monomial(Scalar(1), 1); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree in t; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  Scalar constant_term() const { return coeff(0); }

  Scalar eval(const Scalar& at) const;
  /// Coefficient-wise conjugation (t is real).
  TPoly conj() const;
  /// p(c t).
  TPoly rescale(const Scalar& c) const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Scalar& s);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const Scalar& s) { return a *= s; }
  friend TPoly operator*(const Scalar& s, TPoly a) { return a *= s; }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const TPoly& a, const TPoly& b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

inline Scalar tpoly_eval(const TPoly& p, const Rational& r) { return p.eval(Scalar(r)); }

std::string to_string(const TPoly& p);
std::ostream& operator<<(std::ostream& os, const TPoly& p);

}  // namespace bhopf
