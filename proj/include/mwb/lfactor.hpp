#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mwb/errors.hpp"
#include "mwb/rat.hpp"
#include "mwb/ratfunc.hpp"

namespace mwb {

// Exact Satake eigenvalue zeta(phase) * q^(qexp), symbolic in q.
struct ExactEig {
  Rat phase;  // class mod 1
  Rat qexp;
};

template <class E>
struct EigOps;

template <>
struct EigOps<ExactEig> {
  using Coeff = Cyclo;
  static ExactEig one() { return {Rat(0), Rat(0)}; }
  static ExactEig mul(const ExactEig& a, const ExactEig& b) {
    return {(a.phase + b.phase).mod1(), a.qexp + b.qexp};
  }
  static ExactEig inv(const ExactEig& a) { return {(-a.phase).mod1(), -a.qexp}; }
  static Coeff coeff(const ExactEig& a) { return Cyclo::of(a.phase); }
  static Rat qexp(const ExactEig& a) { return a.qexp; }
};

template <>
struct EigOps<std::complex<double>> {
  using Coeff = std::complex<double>;
  using E = std::complex<double>;
  static E one() { return {1.0, 0.0}; }
  static E mul(const E& a, const E& b) { return a * b; }
  static E inv(const E& a) {
    if (a == E{}) throw input_error("Satake eigenvalue must be nonzero");
    return E{1.0, 0.0} / a;
  }
  static Coeff coeff(const E& a) { return a; }
  static Rat qexp(const E&) { return Rat(0); }
};

enum class RepKind { GL, Sp };

// Unramified principal-series datum: the free Satake eigenvalues of a genuine
// representation of the m-fold cover of GL_d (d entries) or Sp_2d (d entries).
template <class E>
struct SatakeRep {
  RepKind kind = RepKind::GL;
  uint32_t m = 1;
  std::vector<E> eig;

  uint32_t r() const { return m % 2 == 1 ? m : m / 2; }
  uint32_t rank() const { return (uint32_t)eig.size(); }
};

template <class E>
SatakeRep<E> make_rep(RepKind kind, uint32_t m, std::vector<E> eig) {
  if (m == 0) throw input_error("cover degree must be positive");
  SatakeRep<E> rep;
  rep.kind = kind;
  rep.m = m;
  rep.eig = std::move(eig);
  return rep;
}

// Eigenvalue multiset of the standard representation of the dual datum:
//   GL: the d eigenvalues;
//   Sp, m odd:  mu_1..mu_d, 1, mu_d^{-1}..mu_1^{-1}  (2d+1 entries);
//   Sp, m even: mu_1..mu_d,    mu_d^{-1}..mu_1^{-1}  (2d entries).
template <class E>
std::vector<E> satake_vector(const SatakeRep<E>& rep) {
  if (rep.kind == RepKind::GL) return rep.eig;
  std::vector<E> v = rep.eig;
  if (rep.m % 2 == 1) v.push_back(EigOps<E>::one());
  for (size_t i = rep.eig.size(); i-- > 0;) v.push_back(EigOps<E>::inv(rep.eig[i]));
  return v;
}

// Contragredient at the Satake level: GL inverts the eigenvalues, Sp data is
// self-dual.
template <class E>
SatakeRep<E> dual_rep(const SatakeRep<E>& rep) {
  if (rep.kind == RepKind::Sp) return rep;
  SatakeRep<E> d = rep;
  for (auto& v : d.eig) v = EigOps<E>::inv(v);
  return d;
}

// Isobaric concatenation of free eigenvalue lists (parabolic induction datum).
template <class E>
SatakeRep<E> rep_concat(const SatakeRep<E>& a, const SatakeRep<E>& b) {
  if (a.kind != b.kind || a.m != b.m)
    throw input_error("concatenation needs matching kind and cover degree");
  SatakeRep<E> r = a;
  r.eig.insert(r.eig.end(), b.eig.begin(), b.eig.end());
  return r;
}

template <class E>
using FuncOf = RatFuncQ<typename EigOps<E>::Coeff>;

namespace lf_detail {

// One inverse Euler factor (1 - v q^(-shift) X^(sscale))^(-1), the local
// L-factor of sscale*s + shift at eigenvalue v.
template <class E>
void push_lfactor(FuncOf<E>& f, const E& v, const Rat& shift, int sscale) {
  f = f * FuncOf<E>::lin_factor(EigOps<E>::coeff(v), EigOps<E>::qexp(v) - shift,
                                sscale, -1);
}

}  // namespace lf_detail

// L(sscale*s + shift, rep): inverse Euler factors over the standard vector.
template <class E>
FuncOf<E> l_std(const SatakeRep<E>& rep, Rat shift = Rat(0), int sscale = 1) {
  FuncOf<E> f;
  for (const auto& v : satake_vector(rep)) lf_detail::push_lfactor<E>(f, v, shift, sscale);
  return f;
}

// L(sscale*s + shift, repA x repB): factors over products of the two vectors.
template <class E>
FuncOf<E> l_pair(const SatakeRep<E>& a, const SatakeRep<E>& b, Rat shift = Rat(0),
                 int sscale = 1) {
  if (a.m != b.m) throw input_error("paired data must share the cover degree");
  FuncOf<E> f;
  for (const auto& v : satake_vector(a))
    for (const auto& w : satake_vector(b))
      lf_detail::push_lfactor<E>(f, EigOps<E>::mul(v, w), shift, sscale);
  return f;
}

// L(sscale*s + shift, Sym^2 rep) and L(sscale*s + shift, wedge^2 rep).
template <class E>
FuncOf<E> l_sym2(const SatakeRep<E>& rep, Rat shift = Rat(0), int sscale = 1) {
  const auto sv = satake_vector(rep);
  FuncOf<E> f;
  for (size_t i = 0; i < sv.size(); ++i)
    for (size_t j = i; j < sv.size(); ++j)
      lf_detail::push_lfactor<E>(f, EigOps<E>::mul(sv[i], sv[j]), shift, sscale);
  return f;
}

template <class E>
FuncOf<E> l_ext2(const SatakeRep<E>& rep, Rat shift = Rat(0), int sscale = 1) {
  const auto sv = satake_vector(rep);
  FuncOf<E> f;
  for (size_t i = 0; i < sv.size(); ++i)
    for (size_t j = i + 1; j < sv.size(); ++j)
      lf_detail::push_lfactor<E>(f, EigOps<E>::mul(sv[i], sv[j]), shift, sscale);
  return f;
}

// Which doubling integral the normalizing factors belong to: the cover of
// Sp_2c or of GL_c on the non-twist side.
enum class DoublingBranch { Sp, GL };

inline DoublingBranch branch_of(RepKind kind) {
  return kind == RepKind::Sp ? DoublingBranch::Sp : DoublingBranch::GL;
}

// Numerator normalizer a(s, c, tau) of the doubling integral.
//   Sp branch (rc even, enforced):
//     [m odd: L(s - rc/2, tau)] * prod_{j=1..floor(rc/2)} L(2s - rc + 2j - 1, Sym^2 tau)
//                               * prod_{j=1..ceil(rc/2)}  L(2s - rc + 2j - 2, wedge^2 tau)
//   GL branch: prod_{j=1..rc} L(2s + j - rc - 1, tau x tau)
template <class E>
FuncOf<E> a_factor(DoublingBranch br, const SatakeRep<E>& tau, uint32_t c) {
  const long long rc = (long long)tau.r() * c;
  FuncOf<E> f;
  if (br == DoublingBranch::GL) {
    for (long long j = 1; j <= rc; ++j) f = f * l_pair(tau, tau, Rat(j - rc - 1), 2);
    return f;
  }
  if (rc % 2 != 0)
    throw input_error("symplectic-side normalizers need rc even");
  if (tau.m % 2 == 1) f = f * l_std(tau, Rat(-rc, 2), 1);
  for (long long j = 1; j <= rc / 2; ++j) f = f * l_sym2(tau, Rat(2 * j - 1 - rc), 2);
  for (long long j = 1; j <= (rc + 1) / 2; ++j)
    f = f * l_ext2(tau, Rat(2 * j - 2 - rc), 2);
  return f;
}

// Denominator normalizer b(s, c, tau) of the doubling integral.
//   Sp branch (rc even, enforced):
//     [m odd: L(s + rc/2, tau)] * prod_{j=1..rc/2} L(2s + 2j - 2, Sym^2 tau)
//                                                  L(2s + 2j - 1, wedge^2 tau)
//   GL branch: prod_{j=1..rc} L(2s + j - 1, tau x tau)
template <class E>
FuncOf<E> b_factor(DoublingBranch br, const SatakeRep<E>& tau, uint32_t c) {
  const long long rc = (long long)tau.r() * c;
  FuncOf<E> f;
  if (br == DoublingBranch::GL) {
    for (long long j = 1; j <= rc; ++j) f = f * l_pair(tau, tau, Rat(j - 1), 2);
    return f;
  }
  if (rc % 2 != 0)
    throw input_error("symplectic-side normalizers need rc even");
  if (tau.m % 2 == 1) f = f * l_std(tau, Rat(rc, 2), 1);
  for (long long j = 1; j <= rc / 2; ++j)
    f = f * l_sym2(tau, Rat(2 * j - 2), 2) * l_ext2(tau, Rat(2 * j - 1), 2);
  return f;
}

template <class E>
FuncOf<E> gk_ratio(DoublingBranch br, const SatakeRep<E>& tau, uint32_t c) {
  return a_factor(br, tau, c) * b_factor(br, tau, c).inverse();
}

// Normalized intertwining coefficient:
//   C(s, c, tau) = b(1-s, c, dual tau) / a(s, c, tau)
//                  * [L(s, tau) / L(1-s, dual tau) on the odd-m Sp branch].
template <class E>
FuncOf<E> c_factor(DoublingBranch br, const SatakeRep<E>& tau, uint32_t c) {
  const auto td = dual_rep(tau);
  FuncOf<E> f = b_factor(br, td, c).subst(-1, Rat(1)) * a_factor(br, tau, c).inverse();
  if (br == DoublingBranch::Sp && tau.m % 2 == 1)
    f = f * l_std(tau) * l_std(td).subst(-1, Rat(1)).inverse();
  return f;
}

// Unramified doubling gamma factor of pi x tau:
//   Sp pi: L(1-s, dual pi x dual tau) / L(s, pi x tau)
//   GL pi: L(1-s, dual pi x dual tau) L(1-s, pi x dual tau)
//          / (L(s, pi x tau) L(s, dual pi x tau))
template <class E>
FuncOf<E> gamma_unramified_doubling(const SatakeRep<E>& pi, const SatakeRep<E>& tau) {
  const auto pd = dual_rep(pi);
  const auto td = dual_rep(tau);
  if (pi.kind == RepKind::Sp)
    return l_pair(pd, td).subst(-1, Rat(1)) * l_pair(pi, tau).inverse();
  return (l_pair(pd, td) * l_pair(pi, td)).subst(-1, Rat(1)) *
         (l_pair(pi, tau) * l_pair(pd, tau)).inverse();
}

// Rankin-Selberg-normalized gamma factor gamma(s, dual pi x tau):
//   L(1-s, pi x dual tau) / L(s, dual pi x tau).
template <class E>
FuncOf<E> gamma_unramified_rs(const SatakeRep<E>& pi, const SatakeRep<E>& tau) {
  return l_pair(pi, dual_rep(tau)).subst(-1, Rat(1)) *
         l_pair(dual_rep(pi), tau).inverse();
}

// Value of the normalized unramified doubling integral, c = rank of pi:
//   Sp pi: Z(s, pi, tau) = L(s, pi x tau) / b(s, c, tau)
//   GL pi: Z(s, pi, tau) = L(s, pi x tau) L(s, dual pi x tau) / b(s, c, tau),
// the second pairing coming from the tau x tau^* inducing datum of the
// doubled group on the GL branch.
template <class E>
FuncOf<E> unramified_integral_value(const SatakeRep<E>& pi, const SatakeRep<E>& tau) {
  FuncOf<E> num = l_pair(pi, tau);
  if (pi.kind == RepKind::GL) num = num * l_pair(dual_rep(pi), tau);
  return num * b_factor(branch_of(pi.kind), tau, pi.rank()).inverse();
}

using SatakeRepExact = SatakeRep<ExactEig>;
using SatakeRepNum = SatakeRep<std::complex<double>>;

}  // namespace mwb
