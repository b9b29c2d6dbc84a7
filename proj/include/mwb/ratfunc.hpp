#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "mwb/errors.hpp"
#include "mwb/rat.hpp"

namespace mwb {

// Exact root of unity e^{2 pi i phase}, phase a rational mod 1.
struct Cyclo {
  Rat phase;  // reduced representative in [0, 1)

  static Cyclo of(Rat p) { return Cyclo{p.mod1()}; }
  static Cyclo one() { return Cyclo{Rat(0)}; }
  Cyclo operator*(const Cyclo& o) const { return of(phase + o.phase); }
  Cyclo inverse() const { return of(-phase); }
  Cyclo operator-() const { return of(phase + Rat(1, 2)); }
  bool operator==(const Cyclo& o) const { return phase == o.phase; }
  std::complex<double> as_complex() const {
    const double a = 2.0 * std::numbers::pi * phase.as_double();
    return {std::cos(a), std::sin(a)};
  }
};

// Coefficient arithmetic shared by the exact and numeric instantiations.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Cyclo> {
  static constexpr bool exact = true;
  static Cyclo one() { return Cyclo::one(); }
  static Cyclo mul(const Cyclo& a, const Cyclo& b) { return a * b; }
  static Cyclo inv(const Cyclo& a) { return a.inverse(); }
  static Cyclo neg(const Cyclo& a) { return -a; }
  static bool is_one(const Cyclo& a) { return a.phase.is_zero(); }
  static bool is_zero(const Cyclo&) { return false; }
  static bool eq(const Cyclo& a, const Cyclo& b) { return a == b; }
  static bool less(const Cyclo& a, const Cyclo& b) { return a.phase < b.phase; }
  static std::complex<double> as_complex(const Cyclo& a) { return a.as_complex(); }
  static std::string str(const Cyclo& a) {
    if (a.phase == Rat(0)) return "1";
    if (a.phase == Rat(1, 2)) return "-1";
    return "zeta(" + a.phase.str() + ")";
  }
};

template <>
struct CoeffOps<std::complex<double>> {
  static constexpr bool exact = false;
  static constexpr double tol = 1e-12;  // pinned coefficient comparison tolerance
  using C = std::complex<double>;
  static C one() { return {1.0, 0.0}; }
  static C mul(const C& a, const C& b) { return a * b; }
  static C inv(const C& a) {
    if (a == C{}) throw input_error("inverse of zero coefficient");
    return C{1.0, 0.0} / a;
  }
  static C neg(const C& a) { return -a; }
  static bool is_one(const C& a) { return eq(a, one()); }
  static bool is_zero(const C& a) { return a == C{}; }
  static bool eq(const C& a, const C& b) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
  static bool less(const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  }
  static std::complex<double> as_complex(const C& a) { return a; }
  static std::string str(const C& a) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", a.real(), a.imag());
    return buf;
  }
};

// Rational function in X = q^{-s} with rational powers of q as exact scalars:
//   sc q^(se) X^(sd) * prod_i (1 - a_i q^(e_i) X^(d_i))^(mult_i),  d_i >= 1.
// Exact coefficients make the arithmetic symbolic in both q and s.
template <class C>
class RatFuncQ {
 public:
  struct Term {
    C a;
    Rat e;
    int d;
    int mult;
  };

  static RatFuncQ one() { return RatFuncQ(); }

  static RatFuncQ monomial(C a, Rat e, int d) {
    RatFuncQ f;
    if (CoeffOps<C>::is_zero(a)) throw input_error("zero scalar is not representable");
    f.sc_ = a;
    f.se_ = e;
    f.sd_ = d;
    return f;
  }

  // (1 - a q^(e) X^(d))^(mult); d may be negative, the canonical form pulls
  // the monomial out: (1 - b X^-n) = (-b X^-n)(1 - b^{-1} X^n).
  static RatFuncQ lin_factor(C a, Rat e, int d, int mult) {
    RatFuncQ f;
    f.push_factor(a, e, d, mult);
    f.sort_factors();
    return f;
  }

  RatFuncQ operator*(const RatFuncQ& o) const {
    RatFuncQ f(*this);
    f.sc_ = CoeffOps<C>::mul(f.sc_, o.sc_);
    f.se_ = f.se_ + o.se_;
    f.sd_ += o.sd_;
    for (const auto& t : o.terms_) f.push_factor(t.a, t.e, t.d, t.mult);
    f.sort_factors();
    return f;
  }

  RatFuncQ inverse() const {
    RatFuncQ f;
    f.sc_ = CoeffOps<C>::inv(sc_);
    f.se_ = -se_;
    f.sd_ = -sd_;
    for (const auto& t : terms_) f.push_factor(t.a, t.e, t.d, -t.mult);
    f.sort_factors();
    return f;
  }

  RatFuncQ pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFuncQ f;
    RatFuncQ base(*this);
    while (k) {
      if (k & 1) f = f * base;
      base = base * base;
      k >>= 1;
    }
    return f;
  }

  // X -> q^(-w) X^(u), i.e. s -> u s + w on the symbolic variable.
  RatFuncQ subst(int u, Rat w) const {
    if (u == 0) throw input_error("substitution must keep X a variable");
    RatFuncQ f;
    f.sc_ = sc_;
    f.se_ = se_ - w * Rat(sd_);
    f.sd_ = sd_ * u;
    for (const auto& t : terms_) f.push_factor(t.a, t.e - w * Rat(t.d), t.d * u, t.mult);
    f.sort_factors();
    return f;
  }

  bool is_one() const {
    return terms_.empty() && CoeffOps<C>::is_one(sc_) && se_ == Rat(0) && sd_ == 0;
  }

  bool operator==(const RatFuncQ& o) const {
    if (!(CoeffOps<C>::eq(sc_, o.sc_) && se_ == o.se_ && sd_ == o.sd_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const auto& a = terms_[i];
      const auto& b = o.terms_[i];
      if (!(CoeffOps<C>::eq(a.a, b.a) && a.e == b.e && a.d == b.d && a.mult == b.mult))
        return false;
    }
    return true;
  }
  bool operator!=(const RatFuncQ& o) const { return !(*this == o); }

  // X-degree of numerator/denominator, counting the scalar monomial.
  int degree_num() const {
    int n = sd_ > 0 ? sd_ : 0;
    for (const auto& t : terms_)
      if (t.mult > 0) n += t.d * t.mult;
    return n;
  }
  int degree_den() const {
    int n = sd_ < 0 ? -sd_ : 0;
    for (const auto& t : terms_)
      if (t.mult < 0) n += t.d * (-t.mult);
    return n;
  }

  std::complex<double> value(double q, std::complex<double> s) const {
    const std::complex<double> X = std::exp(-s * std::log(q));
    std::complex<double> v = CoeffOps<C>::as_complex(sc_) *
                             std::pow(q, se_.as_double()) * cpow(X, sd_);
    for (const auto& t : terms_) {
      const std::complex<double> f =
          1.0 - CoeffOps<C>::as_complex(t.a) * std::pow(q, t.e.as_double()) * cpow(X, t.d);
      v *= cpow(f, t.mult);
    }
    return v;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const C& scalar_coeff() const { return sc_; }
  const Rat& scalar_qexp() const { return se_; }
  int scalar_xdeg() const { return sd_; }

  // Canonical text form, stable under parse-and-print.
  std::string str() const {
    std::string s = CoeffOps<C>::str(sc_) + " q^(" + se_.str() + ") X^(" +
                    std::to_string(sd_) + ")";
    for (const auto& t : terms_) {
      const std::string f = "(1 - " + CoeffOps<C>::str(t.a) + " q^(" + t.e.str() +
                            ") X^(" + std::to_string(t.d) + "))";
      const int n = t.mult > 0 ? t.mult : -t.mult;
      for (int i = 0; i < n; ++i) s += " * " + f + (t.mult < 0 ? "^-1" : "");
    }
    return s;
  }

  static RatFuncQ parse(const std::string& text);

 private:
  static std::complex<double> cpow(std::complex<double> z, int k) {
    if (k == 0) return {1.0, 0.0};
    if (k < 0) return 1.0 / cpow(z, -k);
    std::complex<double> r{1.0, 0.0};
    while (k) {
      if (k & 1) r *= z;
      z *= z;
      k >>= 1;
    }
    return r;
  }

  void push_factor(C a, Rat e, int d, int mult) {
    if (mult == 0) return;
    if (CoeffOps<C>::is_zero(a)) return;  // the factor is exactly 1
    if (d == 0) throw input_error("degree-zero linear factor is not in canonical form");
    if (d < 0) {
      // (1 - a q^e X^d) = (-a) q^e X^d * (1 - a^{-1} q^(-e) X^(-d))
      C step = CoeffOps<C>::neg(a);
      C total = CoeffOps<C>::one();
      long long k = mult > 0 ? mult : -mult;
      C acc = mult > 0 ? step : CoeffOps<C>::inv(step);
      for (long long i = 0; i < k; ++i) total = CoeffOps<C>::mul(total, acc);
      sc_ = CoeffOps<C>::mul(sc_, total);
      se_ = se_ + e * Rat(mult);
      sd_ += d * mult;
      push_factor(CoeffOps<C>::inv(a), -e, -d, mult);
      return;
    }
    for (auto& t : terms_) {
      if (t.d == d && t.e == e && CoeffOps<C>::eq(t.a, a)) {
        t.mult += mult;
        if (t.mult == 0) terms_.erase(terms_.begin() + (&t - terms_.data()));
        return;
      }
    }
    terms_.push_back(Term{a, e, d, mult});
  }

  void sort_factors() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
      if (x.d != y.d) return x.d < y.d;
      if (x.e != y.e) return x.e < y.e;
      return CoeffOps<C>::less(x.a, y.a);
    });
  }

  C sc_ = CoeffOps<C>::one();
  Rat se_ = Rat(0);
  int sd_ = 0;
  std::vector<Term> terms_;
};

namespace detail {

struct TextCursor {
  const std::string& s;
  size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  bool peek_is(const std::string& lit) const { return s.compare(pos, lit.size(), lit) == 0; }
  void expect(const std::string& lit) {
    if (!peek_is(lit))
      throw input_error("malformed rational function text near position " +
                        std::to_string(pos));
    pos += lit.size();
  }
  bool accept(const std::string& lit) {
    if (!peek_is(lit)) return false;
    pos += lit.size();
    return true;
  }
  long long parse_ll() {
    size_t end = pos;
    if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
    while (end < s.size() && std::isdigit((unsigned char)s[end])) ++end;
    if (end == pos) throw input_error("expected an integer in rational function text");
    const long long v = std::strtoll(s.c_str() + pos, nullptr, 10);
    pos = end;
    return v;
  }
  Rat parse_rat() {
    const long long n = parse_ll();
    if (accept("/")) return Rat(n, parse_ll());
    return Rat(n);
  }
  double parse_double() {
    char* end = nullptr;
    const double v = std::strtod(s.c_str() + pos, &end);
    if (end == s.c_str() + pos) throw input_error("expected a number in rational function text");
    pos = (size_t)(end - s.c_str());
    return v;
  }
};

inline Cyclo parse_coeff(TextCursor& c, const Cyclo*) {
  if (c.accept("zeta(")) {
    const Rat p = c.parse_rat();
    c.expect(")");
    return Cyclo::of(p);
  }
  if (c.accept("-1")) return Cyclo::of(Rat(1, 2));
  c.expect("1");
  return Cyclo::one();
}

inline std::complex<double> parse_coeff(TextCursor& c, const std::complex<double>*) {
  c.expect("(");
  const double re = c.parse_double();
  c.expect(",");
  const double im = c.parse_double();
  c.expect(")");
  return {re, im};
}

}  // namespace detail

template <class C>
RatFuncQ<C> RatFuncQ<C>::parse(const std::string& text) {
  detail::TextCursor c{text};
  const C sc = detail::parse_coeff(c, (const C*)nullptr);
  c.expect(" q^(");
  const Rat se = c.parse_rat();
  c.expect(") X^(");
  const long long sd = c.parse_ll();
  c.expect(")");
  RatFuncQ<C> f = RatFuncQ<C>::monomial(sc, se, (int)sd);
  while (c.accept(" * ")) {
    c.expect("(1 - ");
    const C a = detail::parse_coeff(c, (const C*)nullptr);
    c.expect(" q^(");
    const Rat e = c.parse_rat();
    c.expect(") X^(");
    const long long d = c.parse_ll();
    c.expect("))");
    const int mult = c.accept("^-1") ? -1 : 1;
    f = f * RatFuncQ<C>::lin_factor(a, e, (int)d, mult);
  }
  if (!c.eof()) throw input_error("trailing characters in rational function text");
  return f;
}

using RatFuncExact = RatFuncQ<Cyclo>;
using RatFuncNum = RatFuncQ<std::complex<double>>;

}  // namespace mwb
