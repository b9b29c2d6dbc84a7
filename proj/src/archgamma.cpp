#include "mwb/archgamma.hpp"

#include <cmath>
#include <numbers>

namespace mwb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

// Lanczos approximation, g = 7, 9 terms. Relative error ~1e-13 on Re z >= 1/2.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cx log_gamma_right(cx z) {
  // Valid for Re z >= 1/2; principal branch throughout since Re(z + g - 1/2) > 0.
  const cx zs = z - 1.0;
  cx acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zs + (double)i);
  const cx t = zs + 7.5;
  return 0.5 * kLog2Pi + (zs + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

cx log_sin_pi(cx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const cx i_pi(0.0, kPi);
  return -i_pi * z + std::log(1.0 - std::exp(2.0 * i_pi * z)) + i_pi / 2.0 -
         std::numbers::ln2;
}

cx log_gamma(cx z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - cx(nearest, 0.0)) < 1e-6)
    throw domain_error("log_gamma evaluated within 1e-6 of a pole");
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

double gamma_mult_residual(int r, cx beta) {
  if (r < 1) throw input_error("gamma_mult_residual needs r >= 1");
  cx lhs = ((double)r * beta - 0.5) * std::log((double)r);
  for (int i = 0; i < r; ++i) lhs += log_gamma(beta + (double)i / (double)r);
  const cx rhs = 0.5 * (double)(r - 1) * kLog2Pi + log_gamma((double)r * beta);
  return std::abs(std::exp(lhs - rhs) - 1.0);
}

cx ComplexCharacter::log_value(cx z) const {
  if (z == 0.0) throw input_error("character evaluated at zero");
  return cx(0.0, (double)l * std::arg(z)) + 2.0 * t * std::log(std::abs(z));
}

cx log_tate_l(cx s, const ComplexCharacter& chi) {
  const cx w = s + chi.t + 0.5 * (double)std::llabs(chi.l);
  return std::numbers::ln2 - w * kLog2Pi + log_gamma(w);
}

cx tate_l(cx s, const ComplexCharacter& chi) { return std::exp(log_tate_l(s, chi)); }

namespace {

cx log_tate_eps(cx s, const ComplexCharacter& chi, const ArchPsi& psi) {
  cx out(0.0, kPi / 2.0 * (double)std::llabs(chi.l));
  if (psi.b != 1.0) {
    if (psi.b == 0.0) throw input_error("additive character index must be nonzero");
    out += chi.log_value(psi.b) + (s - 0.5) * 2.0 * std::log(std::abs(psi.b));
  }
  return out;
}

cx log_tate_gamma(cx s, const ComplexCharacter& chi, const ArchPsi& psi) {
  return log_tate_eps(s, chi, psi) + log_tate_l(1.0 - s, chi.inv()) -
         log_tate_l(s, chi);
}

}  // namespace

cx tate_eps(cx s, const ComplexCharacter& chi, const ArchPsi& psi) {
  return std::exp(log_tate_eps(s, chi, psi));
}

cx tate_gamma(cx s, const ComplexCharacter& chi, const ArchPsi& psi) {
  return std::exp(log_tate_gamma(s, chi, psi));
}

ComplexRep make_complex_rep(ArchKind kind, uint32_t m, std::vector<ComplexCharacter> chars) {
  if (m < 1) throw input_error("cover degree must be positive");
  ComplexRep rep;
  rep.kind = kind;
  rep.m_odd = (m % 2 == 1);
  rep.r = rep.m_odd ? m : m / 2;
  rep.chars = std::move(chars);
  return rep;
}

cx rs_gamma_direct(cx s, const ComplexRep& pi, const ComplexRep& tau, const ArchPsi& psi) {
  if (pi.r != tau.r) throw input_error("rankin-selberg factors need matching cover data");
  const long long r = pi.r;
  cx acc = 0.0;
  for (const auto& ti : tau.chars)
    for (const auto& pj : pi.chars)
      acc += log_tate_gamma(s, ti.pow(r).mul(pj.pow(-r)), psi);
  return std::exp(acc);
}

cx rs_gamma_via_rho(cx s, const ComplexRep& pi, const ComplexRep& tau, const ArchPsi& psi) {
  if (pi.r != tau.r) throw input_error("rankin-selberg factors need matching cover data");
  const long long r = pi.r;
  const double rd = (double)r;
  const double logr = std::log(rd);
  const cx sp = (s - 0.5) / rd + 0.5;
  cx acc = 0.0;
  for (const auto& ti : tau.chars) {
    for (const auto& pj : pi.chars) {
      const ComplexCharacter chi = ti.mul(pj.inv());
      // (pi_j tau_i^{-1})(r^r) = exp(2 r log r (t_{pi_j} - t_{tau_i})), r real positive.
      acc += 2.0 * rd * logr * (pj.t - ti.t);
      acc += -(s - 0.5) * 2.0 * logr;
      for (long long a = 1; a <= r; ++a)
        acc += log_tate_gamma(sp + (double)(r - 2 * a + 1) / (2.0 * rd), chi, psi);
    }
  }
  return std::exp(acc);
}

cx rs_psi_twist_factor(cx s, const ComplexRep& pi, const ComplexRep& tau, cx b) {
  if (b == 0.0) throw input_error("additive character index must be nonzero");
  const long long r = pi.r;
  const double k = (double)tau.chars.size();
  const double c = (double)pi.chars.size();
  cx acc = 0.0;
  for (const auto& pj : pi.chars) acc += k * pj.pow(-r).log_value(b);
  for (const auto& ti : tau.chars) acc += c * ti.pow(r).log_value(b);
  acc += k * c * (s - 0.5) * 2.0 * std::log(std::abs(b));
  return std::exp(acc);
}

std::vector<ComplexCharacter> doubling_index_set(const ComplexRep& pi, const ComplexRep& tau) {
  if (pi.r != tau.r || pi.m_odd != tau.m_odd)
    throw input_error("doubling factors need matching cover data");
  const long long r = pi.r;
  std::vector<ComplexCharacter> out;
  for (const auto& ti : tau.chars) {
    for (const auto& pj : pi.chars) {
      out.push_back(ti.pow(r).mul(pj.pow(r)));
      out.push_back(ti.pow(r).mul(pj.pow(-r)));
    }
    if (pi.kind == ArchKind::SpLike && pi.m_odd) out.push_back(ti.pow(r));
  }
  return out;
}

ArchLGammaEps doubling_gamma_complex(cx s, const ComplexRep& pi, const ComplexRep& tau,
                                     const ArchPsi& psi) {
  cx lg = 0.0, ll = 0.0, le = 0.0;
  for (const auto& chi : doubling_index_set(pi, tau)) {
    lg += log_tate_gamma(s, chi, psi);
    ll += log_tate_l(s, chi);
    le += log_tate_eps(s, chi, psi);
  }
  return {std::exp(lg), std::exp(ll), std::exp(le)};
}

}  // namespace mwb
