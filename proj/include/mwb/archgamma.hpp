#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mwb/errors.hpp"

namespace mwb {

using cx = std::complex<double>;

// Principal-branch log Gamma for Re z >= 1/2, extended to the left half plane
// through the reflection formula with a fixed branch of log sin(pi z). Inputs
// within 1e-6 of a pole (nonpositive integer) are a domain_error.
cx log_gamma(cx z);

// Fixed-branch log of sin(pi z):
//   Im z >= 0: -i pi z + log1p(-e^{2 pi i z}) + i pi/2 - log 2,
//   Im z <  0: the conjugate of the value at the conjugate.
cx log_sin_pi(cx z);

// |r^{r b - 1/2} prod_{i=0}^{r-1} Gamma(b + i/r) / ((2 pi)^{(r-1)/2} Gamma(r b)) - 1|,
// computed in log space. Vanishes identically in exact arithmetic.
double gamma_mult_residual(int r, cx beta);

// Character z -> (z/|z|_R)^l |z|^t of the complex field, |z| = |z|_R^2 the
// normalized absolute value. chi(z^k) = chi^k(z) with chi^k = (k l, k t).
struct ComplexCharacter {
  long long l = 0;
  cx t = 0.0;

  ComplexCharacter mul(const ComplexCharacter& o) const { return {l + o.l, t + o.t}; }
  ComplexCharacter inv() const { return {-l, -t}; }
  ComplexCharacter pow(long long k) const { return {l * k, t * (double)k}; }
  cx log_value(cx z) const;
  cx value(cx z) const { return std::exp(log_value(z)); }
};

// Additive character psi_b(x) = psi(b x) of the complex field; b = 1 is the
// reference character.
struct ArchPsi {
  cx b = 1.0;
};

// Local factors of the complex field:
//   L(s, chi)   = 2 (2 pi)^{-(s + t + |l|/2)} Gamma(s + t + |l|/2)
//   eps(s, chi, psi_b) = i^{|l|} chi(b) |b|^{s - 1/2}
//   gamma = eps(s, chi, psi) L(1-s, chi^{-1}) / L(s, chi)
cx log_tate_l(cx s, const ComplexCharacter& chi);
cx tate_l(cx s, const ComplexCharacter& chi);
cx tate_eps(cx s, const ComplexCharacter& chi, const ArchPsi& psi = {});
cx tate_gamma(cx s, const ComplexCharacter& chi, const ArchPsi& psi = {});

enum class ArchKind { GL, SpLike };

// Principal-series datum of an m-fold cover group over the complex field:
// the inducing characters and the arithmetic of the cover retained through
// r and the parity of m.
struct ComplexRep {
  ArchKind kind = ArchKind::GL;
  bool m_odd = true;
  uint32_t r = 1;
  std::vector<ComplexCharacter> chars;
};

ComplexRep make_complex_rep(ArchKind kind, uint32_t m, std::vector<ComplexCharacter> chars);

// gamma(s, pi x tau, psi) as a product of Tate factors at the r-th power
// characters tau_i^r pi_j^{-r}.
cx rs_gamma_direct(cx s, const ComplexRep& pi, const ComplexRep& tau,
                   const ArchPsi& psi = {});

// The same product with every r-th power factor expanded through the Gamma
// multiplication formula: per pair (i, j), with chi = tau_i pi_j^{-1} and
// s' = (s - 1/2)/r + 1/2,
//   (pi_j tau_i^{-1})(r^r) |r|^{-(s-1/2)}
//     prod_{a=1}^{r} gamma(s' + (r - 2a + 1)/(2r), chi, psi).
cx rs_gamma_via_rho(cx s, const ComplexRep& pi, const ComplexRep& tau,
                    const ArchPsi& psi = {});

// Predicted psi_b dependence of the product: central character values times
// |b|^{kc(s - 1/2)}:
//   [prod_j pi_j^{-r}(b)]^k [prod_i tau_i^r(b)]^c |b|^{kc(s-1/2)}.
cx rs_psi_twist_factor(cx s, const ComplexRep& pi, const ComplexRep& tau, cx b);

// Index set of the doubling gamma factor: {tau_i^r pi_j^{+-r}} plus {tau_i^r}
// when the non-twist side is SpLike with m odd.
std::vector<ComplexCharacter> doubling_index_set(const ComplexRep& pi,
                                                 const ComplexRep& tau);

struct ArchLGammaEps {
  cx gamma;
  cx l_value;
  cx eps;
};

// gamma, L, eps of pi x tau over the doubling index set, each a product of
// Tate factors.
ArchLGammaEps doubling_gamma_complex(cx s, const ComplexRep& pi, const ComplexRep& tau,
                                     const ArchPsi& psi = {});

}  // namespace mwb
