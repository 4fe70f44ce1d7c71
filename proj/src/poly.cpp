#include "chroma/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace chroma {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw PoleError("zero base with negative exponent");
  Rational acc(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  for (int i = 0; i < std::abs(e); ++i) acc *= b;
  return acc;
}

}  // namespace

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  p.add_term(Monomial{0, 0, 0}, c);
  return p;
}

LaurentPoly LaurentPoly::term(Int c, int ex, int ew, int et) {
  LaurentPoly p;
  p.add_term(Monomial{ex, ew, et}, c);
  return p;
}

Int LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      r.add_term(Monomial{ma.x + mb.x, ma.w + mb.w, ma.t + mb.t}, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Int& c, int ex, int ew, int et) const {
  LaurentPoly r;
  for (const auto& [m, k] : terms_)
    r.add_term(Monomial{m.x + ex, m.w + ew, m.t + et}, c * k);
  return r;
}

LaurentPoly LaurentPoly::invert_wt() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{m.x, -m.w, -m.t}, c);
  return r;
}

bool LaurentPoly::divisible_by_one_minus_t() const {
  // Vanishing at t = 1: the coefficient sum per (x, w) monomial is zero.
  std::map<std::pair<int, int>, Int> sums;
  for (const auto& [m, c] : terms_) sums[{m.x, m.w}] += c;
  return std::all_of(sums.begin(), sums.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::div_one_minus_t() const {
  // Synthetic division in t per (x, w) group: num = (1-t) q means
  // n_j = q_j - q_{j-1}, so q_j is the running prefix sum of n.
  std::map<std::pair<int, int>, std::map<int, Int>> groups;
  for (const auto& [m, c] : terms_) groups[{m.x, m.w}][m.t] = c;
  LaurentPoly q;
  for (const auto& [xw, tcoeffs] : groups) {
    Int run = 0;
    int last_t = 0;
    bool first = true;
    for (const auto& [te, c] : tcoeffs) {
      if (!first && run != 0) {
        // carry the running value across exponent gaps
        for (int j = last_t + 1; j < te; ++j)
          q.add_term(Monomial{xw.first, xw.second, j}, run);
      }
      run += c;
      if (run != 0) q.add_term(Monomial{xw.first, xw.second, te}, run);
      last_t = te;
      first = false;
    }
    if (run != 0) throw std::logic_error("not divisible by (1-t)");
  }
  return q;
}

Rational LaurentPoly::eval(const Rational& x0, const Rational& w0,
                           const Rational& t0) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_)
    acc += Rational(c) * rational_pow(x0, m.x) * rational_pow(w0, m.w) *
           rational_pow(t0, m.t);
  return acc;
}

XsPoly XsPoly::term(Int c, int ex, int es) {
  XsPoly p;
  p.add_term(XsMonomial{ex, es}, c);
  return p;
}

void XsPoly::add_term(const XsMonomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

XsPoly XsPoly::operator+(const XsPoly& rhs) const {
  XsPoly r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
  return r;
}

XsPoly XsPoly::operator*(const XsPoly& rhs) const {
  XsPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      r.add_term(XsMonomial{ma.x + mb.x, ma.s + mb.s}, ca * cb);
  return r;
}

bool XsPoly::is_pure_s() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.x == 0; });
}

std::map<int, Int> XsPoly::s_terms() const {
  if (!is_pure_s()) throw std::logic_error("x-dependent value is not a pure s-polynomial");
  std::map<int, Int> r;
  for (const auto& [m, c] : terms_) r[m.s] = c;
  return r;
}

bool XsPoly::divisible_by_one_minus_s2() const {
  // (1-s^2) divides iff the value vanishes at s = 1 and s = -1 per x-group,
  // i.e. the coefficient sums over each (x, s mod 2) class cancel in pairs.
  // Equivalent prefix-sum test with stride 2.
  std::map<std::pair<int, int>, Int> sums;
  for (const auto& [m, c] : terms_)
    sums[{m.x, ((m.s % 2) + 2) % 2}] += c;
  return std::all_of(sums.begin(), sums.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

XsPoly XsPoly::div_one_minus_s2() const {
  // num = (1 - s^2) q: n_j = q_j - q_{j-2}, stride-2 prefix sums per
  // (x, parity) class.
  std::map<std::pair<int, int>, std::map<int, Int>> groups;
  for (const auto& [m, c] : terms_)
    groups[{m.x, ((m.s % 2) + 2) % 2}][m.s] = c;
  XsPoly q;
  for (const auto& [key, scoeffs] : groups) {
    Int run = 0;
    int last_s = 0;
    bool first = true;
    for (const auto& [se, c] : scoeffs) {
      if (!first && run != 0)
        for (int j = last_s + 2; j < se; j += 2)
          q.add_term(XsMonomial{key.first, j}, run);
      run += c;
      if (run != 0) q.add_term(XsMonomial{key.first, se}, run);
      last_s = se;
      first = false;
    }
    if (run != 0) throw SpecializationError("(1-s^2) does not divide the specialized numerator");
  }
  return q;
}

SkeinValue::SkeinValue(LaurentPoly num, int denom_pow)
    : num_(std::move(num)), denom_pow_(denom_pow) {
  if (denom_pow_ < 0) throw std::logic_error("negative denominator power");
  if (num_.is_zero()) {
    denom_pow_ = 0;
    return;
  }
  while (denom_pow_ > 0 && num_.divisible_by_one_minus_t()) {
    num_ = num_.div_one_minus_t();
    --denom_pow_;
  }
}

SkeinValue SkeinValue::y() {
  LaurentPoly n = LaurentPoly::term(1, 1, 2, 1) + LaurentPoly::term(-1, 1, 0, 0);
  return SkeinValue(std::move(n), 1);
}

SkeinValue SkeinValue::operator+(const SkeinValue& rhs) const {
  int k = std::max(denom_pow_, rhs.denom_pow_);
  LaurentPoly one_minus_t =
      LaurentPoly::one() - LaurentPoly::term(1, 0, 0, 1);
  LaurentPoly a = num_;
  for (int i = denom_pow_; i < k; ++i) a = a * one_minus_t;
  LaurentPoly b = rhs.num_;
  for (int i = rhs.denom_pow_; i < k; ++i) b = b * one_minus_t;
  return SkeinValue(a + b, k);
}

SkeinValue SkeinValue::operator-(const SkeinValue& rhs) const {
  return *this + (-rhs);
}

SkeinValue SkeinValue::operator-() const {
  SkeinValue r = *this;
  r.num_ = -r.num_;
  return r;
}

SkeinValue SkeinValue::operator*(const SkeinValue& rhs) const {
  return SkeinValue(num_ * rhs.num_, denom_pow_ + rhs.denom_pow_);
}

SkeinValue SkeinValue::pow(unsigned e) const {
  SkeinValue acc = SkeinValue::one();
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Rational SkeinValue::eval(const Rational& x0, const Rational& w0,
                          const Rational& t0) const {
  if (denom_pow_ > 0 && t0 == 1)
    throw PoleError("evaluation at the pole t = 1");
  Rational n = num_.eval(x0, w0, t0);
  Rational d = rational_pow(Rational(1) - t0, denom_pow_);
  return n / d;
}

XsPoly SkeinValue::substitute_half() const {
  XsPoly n;
  for (const auto& [m, c] : num_.terms())
    n.add_term(XsMonomial{m.x, m.w + 2 * m.t}, c);
  for (int i = 0; i < denom_pow_; ++i) n = n.div_one_minus_s2();
  return n;
}

SkeinValue SkeinValue::invert_wt() const {
  // num(x, 1/w, 1/t) / (1 - 1/t)^k  =  (-1)^k t^k num(x, 1/w, 1/t) / (1-t)^k
  LaurentPoly n = num_.invert_wt().shifted(denom_pow_ % 2 == 0 ? 1 : -1, 0, 0,
                                           denom_pow_);
  return SkeinValue(std::move(n), denom_pow_);
}

namespace {

void append_power(std::ostringstream& os, bool& any, const char* var, int e) {
  if (e == 0) return;
  if (any) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  any = true;
}

std::string monomial_str(const Int& coeff_abs, int ex, int ew, int et) {
  std::ostringstream os;
  bool any = false;
  if (coeff_abs != 1 || (ex == 0 && ew == 0 && et == 0)) {
    os << coeff_abs;
    any = true;
  }
  append_power(os, any, "x", ex);
  append_power(os, any, "w", ew);
  append_power(os, any, "t", et);
  return os.str();
}

// Terms in descending (x, w, t) exponent order, signs folded into the
// separators.
std::string sum_str(const std::vector<std::pair<Monomial, Int>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << monomial_str(abs(c), m.x, m.w, m.t);
  }
  return os.str();
}

}  // namespace

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Int>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return b.first < a.first;
  });
  return sum_str(terms);
}

std::string render(const SkeinValue& v) {
  if (v.is_zero()) return "0";

  Monomial mins = v.num().terms().begin()->first;
  for (const auto& [m, c] : v.num().terms()) {
    mins.x = std::min(mins.x, m.x);
    mins.w = std::min(mins.w, m.w);
    mins.t = std::min(mins.t, m.t);
  }
  LaurentPoly n = v.num().shifted(1, -mins.x, -mins.w, -mins.t);

  std::vector<std::pair<Monomial, Int>> terms(n.terms().begin(), n.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return b.first < a.first;
  });

  // Positive extracted exponents stay with the numerator, negative ones
  // form the denominator monomial.
  int px = std::max(mins.x, 0), pw = std::max(mins.w, 0), pt = std::max(mins.t, 0);
  int dx = std::max(-mins.x, 0), dw = std::max(-mins.w, 0), dt = std::max(-mins.t, 0);

  std::ostringstream den;
  bool den_any = false;
  int den_factors = (v.denom_pow() > 0) + (dx != 0) + (dw != 0) + (dt != 0);
  if (v.denom_pow() > 0) {
    den << "(1-t)";
    if (v.denom_pow() > 1) den << '^' << v.denom_pow();
    den_any = true;
  }
  append_power(den, den_any, "x", dx);
  append_power(den, den_any, "w", dw);
  append_power(den, den_any, "t", dt);

  std::string num_str;
  if (terms.size() == 1) {
    const auto& [m, c] = terms.front();
    std::ostringstream os;
    if (c < 0) os << '-';
    os << monomial_str(abs(c), m.x + px, m.w + pw, m.t + pt);
    num_str = os.str();
  } else {
    std::ostringstream os;
    bool any = false;
    append_power(os, any, "x", px);
    append_power(os, any, "w", pw);
    append_power(os, any, "t", pt);
    if (any) os << "*(" << sum_str(terms) << ')';
    else if (den_any) os << '(' << sum_str(terms) << ')';
    else os << sum_str(terms);
    num_str = os.str();
  }

  if (!den_any) return num_str;
  if (den_factors > 1) return num_str + " / (" + den.str() + ")";
  return num_str + " / " + den.str();
}

std::string render(const XsPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<XsMonomial, Int>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return b.first < a.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::ostringstream t;
    bool any = false;
    if (abs(c) != 1 || (m.x == 0 && m.s == 0)) {
      t << abs(c);
      any = true;
    }
    append_power(t, any, "x", m.x);
    append_power(t, any, "s", m.s);
    os << t.str();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SkeinValue& v) { return os << render(v); }
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << render(p); }
std::ostream& operator<<(std::ostream& os, const XsPoly& p) { return os << render(p); }

}  // namespace chroma
