#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chroma {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Evaluation at a pole (t = 1 with a nontrivial denominator, or a zero
/// base raised to a negative power).
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The w = t^(1/2) specialization did not divide out the (1-t) powers.
/// Signals a value that is not a monochrome invariant, or a bug upstream.
struct SpecializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent vector of a term c * x^x w^w t^t. The zero monomial does not
/// exist; absence of a term encodes zero.
struct Monomial {
  int x = 0;
  int w = 0;
  int t = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Integer-coefficient Laurent polynomial in x, w, t. Stored coefficients
/// are never zero; equal term maps mean equal values.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly term(Int c, int ex, int ew, int et);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  /// Coefficient of a monomial (zero if absent).
  Int coeff(const Monomial& m) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly&) const = default;

  /// Multiply every term by c * x^ex w^ew t^et.
  LaurentPoly shifted(const Int& c, int ex, int ew, int et) const;

  /// Exponent negation w -> w^-1, t -> t^-1 (x untouched).
  LaurentPoly invert_wt() const;

  /// Viewing the value as a polynomial in t with Laurent coefficients in
  /// (x, w): true iff it vanishes at t = 1.
  bool divisible_by_one_minus_t() const;

  /// Exact quotient by (1 - t); throws std::logic_error if not divisible.
  LaurentPoly div_one_minus_t() const;

  Rational eval(const Rational& x0, const Rational& w0, const Rational& t0) const;

  void add_term(const Monomial& m, const Int& c);

 private:
  std::map<Monomial, Int> terms_;
};

/// Term map of a Laurent polynomial in x and s (s stands for t^(1/2)),
/// the codomain of the half-substitution.
struct XsMonomial {
  int x = 0;
  int s = 0;
  friend auto operator<=>(const XsMonomial&, const XsMonomial&) = default;
};

class XsPoly {
 public:
  XsPoly() = default;
  static XsPoly term(Int c, int ex, int es);

  bool is_zero() const { return terms_.empty(); }
  const std::map<XsMonomial, Int>& terms() const { return terms_; }
  void add_term(const XsMonomial& m, const Int& c);

  XsPoly operator+(const XsPoly& rhs) const;
  XsPoly operator*(const XsPoly& rhs) const;
  bool operator==(const XsPoly&) const = default;

  /// True iff every x-exponent is zero (a pure polynomial in s).
  bool is_pure_s() const;
  /// The s-exponent -> coefficient map; throws if not pure in s.
  std::map<int, Int> s_terms() const;

  bool divisible_by_one_minus_s2() const;
  XsPoly div_one_minus_s2() const;

 private:
  std::map<XsMonomial, Int> terms_;
};

/// Element of Q(x,w,t) of the form num / (1-t)^k, the subring every value
/// of the invariant lives in. Always kept normalized: when denom_pow > 0
/// the numerator is not divisible by (1-t).
class SkeinValue {
 public:
  SkeinValue() = default;  // zero
  SkeinValue(LaurentPoly num, int denom_pow);

  static SkeinValue zero() { return SkeinValue(); }
  static SkeinValue one() { return SkeinValue(LaurentPoly::one(), 0); }
  static SkeinValue from_poly(LaurentPoly p) { return SkeinValue(std::move(p), 0); }
  /// y = x (t w^2 - 1) / (1 - t), the per-extra-circle unlink factor.
  static SkeinValue y();

  const LaurentPoly& num() const { return num_; }
  int denom_pow() const { return denom_pow_; }
  bool is_zero() const { return num_.is_zero(); }

  SkeinValue operator+(const SkeinValue& rhs) const;
  SkeinValue operator-(const SkeinValue& rhs) const;
  SkeinValue operator*(const SkeinValue& rhs) const;
  SkeinValue operator-() const;
  bool operator==(const SkeinValue&) const = default;

  SkeinValue pow(unsigned e) const;

  /// Exact evaluation; throws PoleError at t0 = 1 when denom_pow > 0.
  Rational eval(const Rational& x0, const Rational& w0, const Rational& t0) const;

  /// w := s, t := s^2. The (1-s^2)^k denominator must divide out exactly;
  /// otherwise throws SpecializationError.
  XsPoly substitute_half() const;

  /// w -> w^-1, t -> t^-1, re-expressed over (1-t)^k via
  /// (1 - t^-1)^k = (-1)^k t^-k (1-t)^k.
  SkeinValue invert_wt() const;

 private:
  LaurentPoly num_;
  int denom_pow_ = 0;
};

/// Canonical text form `N / ((1-t)^k * x^a * w^b * t^c)`: the extracted
/// monomial leaves N with nonnegative exponents and no common monomial
/// factor; unit factors are omitted; a positive common monomial becomes a
/// numerator prefix. Terms are ordered descending by (x, w, t) exponents.
std::string render(const SkeinValue& v);
std::string render(const LaurentPoly& p);
std::string render(const XsPoly& p);

std::ostream& operator<<(std::ostream& os, const SkeinValue& v);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const XsPoly& p);

}  // namespace chroma
