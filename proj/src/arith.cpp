#include "mwb/arith.hpp"

#include <cmath>
#include <numbers>

namespace mwb {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_divisors(uint32_t n) {
  std::vector<uint32_t> ps;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

uint32_t pow_mod(uint64_t a, uint64_t e, uint32_t q) {
  uint64_t r = 1;
  a %= q;
  while (e) {
    if (e & 1) r = r * a % q;
    a = a * a % q;
    e >>= 1;
  }
  return (uint32_t)r;
}

}  // namespace

ResidueField::ResidueField(uint32_t q, uint32_t m) : q_(q), m_(m) {
  if (m == 0) throw input_error("symbol order m must be positive");
  if (q > (1u << 22)) throw input_error("residue field size out of supported range");
  if (!is_prime(q) || q <= 3) throw input_error("q must be a prime > 3");
  if ((q - 1) % (2 * m) != 0)
    throw input_error("2m must divide q-1 (tame unramified case); got q=" +
                      std::to_string(q) + ", m=" + std::to_string(m));
  r_ = (m % 2 == 1) ? m : m / 2;

  const auto divs = prime_divisors(q - 1);
  gen_ = 0;
  for (uint32_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (uint32_t p : divs)
      if (pow_mod(g, (q - 1) / p, q) == 1) { primitive = false; break; }
    if (primitive) { gen_ = g; break; }
  }
  pow_.assign(q - 1, 1);
  dlog_.assign(q, 0);
  uint64_t x = 1;
  for (uint32_t e = 0; e < q - 1; ++e) {
    pow_[e] = (uint32_t)x;
    dlog_[x] = e;
    x = x * gen_ % q;
  }
}

uint32_t ResidueField::mul(uint32_t a, uint32_t b) const {
  return (uint32_t)((uint64_t)(a % q_) * (b % q_) % q_);
}

uint32_t ResidueField::inv(uint32_t a) const {
  a %= q_;
  if (a == 0) throw input_error("inverse of zero residue");
  return pow_[(q_ - 1 - dlog_[a]) % (q_ - 1)];
}

uint32_t ResidueField::pow(uint32_t a, long long e) const {
  a %= q_;
  if (a == 0) {
    if (e <= 0) throw input_error("zero residue to nonpositive power");
    return 0;
  }
  long long n = (long long)(q_ - 1);
  long long k = ((long long)dlog_[a] * (e % n)) % n;
  if (k < 0) k += n;
  return pow_[k];
}

uint32_t ResidueField::dlog(uint32_t a) const {
  a %= q_;
  if (a == 0) throw input_error("discrete log of zero");
  return dlog_[a];
}

uint32_t ResidueField::from_int(long long v) const {
  long long r = v % (long long)q_;
  if (r < 0) r += q_;
  return (uint32_t)r;
}

RootOfUnity::RootOfUnity(long long exponent, uint32_t m) : m_(m) {
  if (m == 0) throw input_error("root-of-unity modulus must be positive");
  long long e = exponent % (long long)m;
  if (e < 0) e += m;
  e_ = (uint32_t)e;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  if (m_ != o.m_) throw input_error("root-of-unity modulus mismatch");
  return RootOfUnity((long long)e_ + o.e_, m_);
}

std::complex<double> RootOfUnity::as_complex() const {
  const double ang = 2.0 * std::numbers::pi * (double)e_ / (double)m_;
  return {std::cos(ang), std::sin(ang)};
}

std::string RootOfUnity::str() const {
  return "zeta_" + std::to_string(m_) + "^" + std::to_string(e_);
}

LocalFieldElem local_elem(const ResidueField& F, int valuation, long long unit) {
  uint32_t u = F.from_int(unit);
  if (u == 0) throw input_error("local field element needs a nonzero leading unit");
  return LocalFieldElem{valuation, u};
}

LocalFieldElem local_mul(const ResidueField& F, LocalFieldElem a, LocalFieldElem b) {
  return LocalFieldElem{a.valuation + b.valuation, F.mul(a.unit, b.unit)};
}

LocalFieldElem local_inv(const ResidueField& F, LocalFieldElem a) {
  return LocalFieldElem{-a.valuation, F.inv(a.unit)};
}

LocalFieldElem local_pow(const ResidueField& F, LocalFieldElem a, long long n) {
  if (std::abs((long long)a.valuation * n) > (1ll << 30))
    throw input_error("valuation overflow in local_pow");
  return LocalFieldElem{(int)(a.valuation * n), F.pow(a.unit, n)};
}

std::optional<LocalFieldElem> one_minus(const ResidueField& F, LocalFieldElem a) {
  if (a.valuation < 0) return LocalFieldElem{a.valuation, F.neg(a.unit)};
  if (a.valuation > 0) return local_one();
  if (a.unit == 1) return std::nullopt;
  return LocalFieldElem{0, F.sub(1, a.unit)};
}

std::string local_str(const ResidueField&, LocalFieldElem a) {
  std::string s;
  if (a.unit != 1 || a.valuation == 0) s = std::to_string(a.unit);
  if (a.valuation != 0) {
    if (!s.empty()) s += "*";
    s += "pi";
    if (a.valuation != 1) s += "^" + std::to_string(a.valuation);
  }
  return s;
}

RootOfUnity mu_embed(const ResidueField& F, uint32_t u, uint32_t m) {
  if (m == 0) m = F.m();
  if ((F.q() - 1) % m != 0) throw input_error("mu_embed requires m | q-1");
  u %= F.q();
  if (u == 0) throw input_error("mu_embed of zero");
  // u^{(q-1)/m} = (g^{(q-1)/m})^{dlog u}, so the exponent class is dlog u mod m.
  return RootOfUnity((long long)F.dlog(u), m);
}

RootOfUnity hilbert_symbol(const ResidueField& F, LocalFieldElem a, LocalFieldElem b) {
  const long long va = a.valuation, vb = b.valuation;
  uint32_t u = ((va * vb) % 2 != 0) ? F.neg(1) : 1;
  u = F.mul(u, F.pow(a.unit, vb));
  u = F.mul(u, F.pow(b.unit, -va));
  return mu_embed(F, u);
}

}  // namespace mwb
