#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwb/errors.hpp"

namespace mwb {

// Prime residue field F_q with a fixed primitive root and full power/dlog
// tables, carrying the symbol order m. Requires q prime, q > 3 and 2m | q-1,
// so mu_2m lies in F_q^* and -1 is an m-th power.
class ResidueField {
 public:
  ResidueField(uint32_t q, uint32_t m);

  uint32_t q() const { return q_; }
  uint32_t m() const { return m_; }
  // r = m for odd m, m/2 for even m.
  uint32_t r() const { return r_; }
  uint32_t generator() const { return gen_; }

  // Nonzero residues are integers in [1, q); zero is only valid for add/sub/neg.
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % q_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + q_ - b % q_) % q_; }
  uint32_t neg(uint32_t a) const { return (q_ - a % q_) % q_; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, long long e) const;
  // Exponent of the fixed generator, in [0, q-1).
  uint32_t dlog(uint32_t a) const;
  // Reduce an arbitrary integer mod q.
  uint32_t from_int(long long v) const;

  bool operator==(const ResidueField& o) const { return q_ == o.q_ && m_ == o.m_; }

 private:
  uint32_t q_, m_, r_, gen_;
  std::vector<uint32_t> pow_;   // pow_[e] = gen^e for e in [0, q-1)
  std::vector<uint32_t> dlog_;  // dlog_[pow_[e]] = e
};

// Element of mu_m stored additively as an exponent class mod m.
class RootOfUnity {
 public:
  RootOfUnity() : m_(1), e_(0) {}
  RootOfUnity(long long exponent, uint32_t m);

  uint32_t modulus() const { return m_; }
  uint32_t exponent() const { return e_; }
  bool is_identity() const { return e_ == 0; }

  static RootOfUnity identity(uint32_t m) { return RootOfUnity(0, m); }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const { return RootOfUnity(-(long long)e_, m_); }
  RootOfUnity pow(long long k) const { return RootOfUnity((long long)e_ * (k % (long long)m_), m_); }
  bool operator==(const RootOfUnity& o) const { return m_ == o.m_ && e_ == o.e_; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

  std::complex<double> as_complex() const;
  std::string str() const;  // "zeta_m^e"

 private:
  uint32_t m_, e_;
};

// Leading term u * pi^v of a local field element: the valuation and the
// nonzero residue of the leading unit. This is lossless for every tame
// computation in scope.
struct LocalFieldElem {
  int valuation = 0;
  uint32_t unit = 1;

  bool operator==(const LocalFieldElem& o) const {
    return valuation == o.valuation && unit == o.unit;
  }
  bool operator!=(const LocalFieldElem& o) const { return !(*this == o); }
};

LocalFieldElem local_elem(const ResidueField& F, int valuation, long long unit);
inline LocalFieldElem local_one() { return LocalFieldElem{0, 1}; }
inline LocalFieldElem local_uniformizer() { return LocalFieldElem{1, 1}; }

LocalFieldElem local_mul(const ResidueField& F, LocalFieldElem a, LocalFieldElem b);
LocalFieldElem local_inv(const ResidueField& F, LocalFieldElem a);
LocalFieldElem local_pow(const ResidueField& F, LocalFieldElem a, long long n);

// Leading term of 1 - a when the leading-term data determines it:
//   v(a) < 0: (v, -u);  v(a) = 0, u != 1: (0, 1-u);  v(a) > 0: (0, 1).
// For a with v = 0, u = 1 the value is below leading order: nullopt.
std::optional<LocalFieldElem> one_minus(const ResidueField& F, LocalFieldElem a);

// Render as "u*pi^v" with trivial parts dropped, e.g. "3", "pi", "5*pi^-2".
std::string local_str(const ResidueField& F, LocalFieldElem a);

// Homomorphism F_q^* -> mu_m: u -> u^{(q-1)/m} followed by discrete log base
// the canonical order-m generator g^{(q-1)/m}. Kernel is the m-th powers.
// m = 0 means the field's own m; any m | q-1 is accepted.
RootOfUnity mu_embed(const ResidueField& F, uint32_t u, uint32_t m = 0);

// Tame Hilbert symbol of order m:
//   (a,b) = mu_embed of the unit part of (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}.
// Bimultiplicative and antisymmetric; (a,a) = (a,-1) = 1 since mu_2m < F_q^*.
RootOfUnity hilbert_symbol(const ResidueField& F, LocalFieldElem a, LocalFieldElem b);

}  // namespace mwb
