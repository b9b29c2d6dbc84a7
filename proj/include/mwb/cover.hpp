#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwb/arith.hpp"
#include "mwb/errors.hpp"

namespace mwb {

// Signed permutation w with w e_j = sign_j e_{perm_j}: the matrices with one
// nonzero entry +-1 per row and column. Indices are 0-based throughout.
struct SignedPermutation {
  std::vector<int> perm;   // images of column indices
  std::vector<int> signs;  // +-1 per column

  static SignedPermutation identity(int d);
  static SignedPermutation transposition(int d, int i, int j);

  int dim() const { return (int)perm.size(); }
  bool is_pure() const;
  // Matrix product this * other.
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;
  int parity_sign() const;  // determinant of the unsigned part
  bool operator==(const SignedPermutation& o) const {
    return perm == o.perm && signs == o.signs;
  }
};

void validate_permutation(const std::vector<int>& perm);

enum class GroupKind {
  GL,      // GL_d with the block-compatible cocycle sigma_d
  Sp,      // Sp_2d realized inside GL_2d with sigma_2d restricted
  GLinSp,  // GL_d with the Siegel-Levi cocycle sigma^{diamond}_d
};

std::string kind_name(GroupKind k);

// Element <x, eps> of the m-fold cover of the monomial subgroup, stored in
// the canonical form <t,1><w,1><I,eps> with w a pure permutation; signs of a
// signed permutation are absorbed into the torus, which changes no cocycle
// value because (u, -1)_m = 1.
class MonomialCoverElem {
 public:
  static MonomialCoverElem identity(GroupKind kind, const ResidueField& F, int dim);
  // dim(torus) is the matrix size: d for GL and GLinSp, 2d for Sp.
  static MonomialCoverElem torus(GroupKind kind, const ResidueField& F,
                                 std::vector<LocalFieldElem> t,
                                 RootOfUnity eps);
  static MonomialCoverElem torus(GroupKind kind, const ResidueField& F,
                                 std::vector<LocalFieldElem> t);
  static MonomialCoverElem weyl(GroupKind kind, const ResidueField& F,
                                const SignedPermutation& w);
  static MonomialCoverElem from_parts(GroupKind kind, const ResidueField& F,
                                      std::vector<LocalFieldElem> t,
                                      const SignedPermutation& w,
                                      RootOfUnity eps);

  GroupKind kind() const { return kind_; }
  const ResidueField& field() const { return *field_; }
  int dim() const { return (int)torus_.size(); }
  const std::vector<LocalFieldElem>& torus_part() const { return torus_; }
  const std::vector<int>& perm_part() const { return perm_; }
  const RootOfUnity& eps() const { return eps_; }

  bool is_torus() const;
  bool is_identity_matrix() const;
  bool same_matrix(const MonomialCoverElem& o) const;
  bool operator==(const MonomialCoverElem& o) const;
  bool operator!=(const MonomialCoverElem& o) const { return !(*this == o); }

  MonomialCoverElem with_eps(RootOfUnity eps) const;
  std::string str() const;

 private:
  MonomialCoverElem(GroupKind kind, const ResidueField& F,
                    std::vector<LocalFieldElem> t, std::vector<int> perm,
                    RootOfUnity eps);

  GroupKind kind_;
  const ResidueField* field_;
  std::vector<LocalFieldElem> torus_;
  std::vector<int> perm_;
  RootOfUnity eps_;
};

// Torus cocycle of GL_d: prod_{i<j} (t_i, u_j)_m.
RootOfUnity cocycle_gl_torus(const ResidueField& F,
                             const std::vector<LocalFieldElem>& t,
                             const std::vector<LocalFieldElem>& u);

// Torus cocycle of Sp_2d on the free coordinates t_1..t_d of
// diag(t_1..t_d, t_d^{-1}..t_1^{-1}): prod_i (t_i, u_i)_m^{-1}.
RootOfUnity cocycle_sp_torus(const ResidueField& F,
                             const std::vector<LocalFieldElem>& t,
                             const std::vector<LocalFieldElem>& u);

// Expand free symplectic torus coordinates to the full 2d diagonal.
std::vector<LocalFieldElem> sp_torus_expand(const ResidueField& F,
                                            const std::vector<LocalFieldElem>& t);

enum class DiamondRoute {
  Direct,    // prod_i (t_i, u_i)_m^{-1}
  Embedded,  // sigma_2d on diag(b, b^*) via the GL torus formula
};

// Torus cocycle of the Siegel-Levi cover of GL_d; both routes must agree.
RootOfUnity cocycle_diamond_torus(const ResidueField& F,
                                  const std::vector<LocalFieldElem>& t,
                                  const std::vector<LocalFieldElem>& u,
                                  DiamondRoute route = DiamondRoute::Direct);

// Product in the cover. Canonical-form bookkeeping:
//   <t1,1><w1,1> * <t2,1><w2,1> =
//     <t1 * (w1 t2 w1^{-1}), kappa> <w1 w2, 1>,
//   kappa = conj-correction(w1, t2) * torus-cocycle(t1, ^{w1} t2).
// The conjugation correction for GL is prod over inverted positive roots
// (i<j, pi(i)>pi(j)) of (t_j, t_i)_m; for Sp and GLinSp it vanishes
// identically once evaluated through the ambient sigma_2d.
MonomialCoverElem monomial_mul(const MonomialCoverElem& x, const MonomialCoverElem& y);

MonomialCoverElem monomial_inv(const MonomialCoverElem& x);

// x y x^{-1} via monomial_mul.
MonomialCoverElem conj_elem(const MonomialCoverElem& x, const MonomialCoverElem& y);

// det of the monomial matrix: parity sign of the permutation times prod t_i.
LocalFieldElem monomial_det(const MonomialCoverElem& x);

enum class CocycleTag {
  GL,        // sigma_d
  Sp,        // sigma_2d on free symplectic coordinates
  Diamond,   // sigma^{diamond}_d
  SquareDet, // sigma_d^2 * (det, det)^{-1}, cohomologous to Diamond
};

// sigma(t,u) * sigma(u,t)^{-1} for the requested torus cocycle. A coboundary
// invariant: cohomologous cocycles give equal pairings.
RootOfUnity commutator_pairing(CocycleTag tag, const ResidueField& F,
                               const std::vector<LocalFieldElem>& t,
                               const std::vector<LocalFieldElem>& u);

// Pairing for commuting cover elements: eps(xy) * eps(yx)^{-1}.
RootOfUnity commutator_pairing(const MonomialCoverElem& x, const MonomialCoverElem& y);

// The involution b -> J (b^T)^{-1} J lifted to the Siegel-Levi cover with
// unchanged mu_m part; an automorphism of the cover.
MonomialCoverElem star_involution(const MonomialCoverElem& x);

// Torus/permutation concatenation diag(a, b) with multiplied mu_m parts; a
// plain matrix-level pairing with no cocycle twist.
MonomialCoverElem block_diag(const MonomialCoverElem& a, const MonomialCoverElem& b);

// copies-fold block-diagonal repetition diag(x, ..., x), mu_m part kept.
MonomialCoverElem diag_embed(const MonomialCoverElem& x, uint32_t copies);

// Block-diagonal embedding (g1, g2) -> diag(g1 x rk, g2, g1 x (rk-1)) into the
// Siegel-Levi cover of GL_{2rkc}, with mu_m part eps1^{-1} eps2. This is a
// group homomorphism exactly because m | 2rk kills the 2rk-th power of every
// cocycle value; other (r, k) are rejected.
MonomialCoverElem doubling_embed_gl(const MonomialCoverElem& g1,
                                    const MonomialCoverElem& g2,
                                    uint32_t r, uint32_t k);

// (sigma^{diamond}_{rkc}(x^{diag}, y^{diag}), sigma^{diamond}_c(x, y)^{rk})
// for the rk-fold diagonal embedding of Siegel-Levi monomials; block
// multiplicativity of the diamond cocycle makes the two equal.
std::pair<RootOfUnity, RootOfUnity> diag_embed_power(const MonomialCoverElem& x,
                                                     const MonomialCoverElem& y,
                                                     uint32_t r, uint32_t k);

// True iff x commutes with a deterministic generating set of its group:
// one-slot torus elements (unit generator and uniformizer) and all simple
// reflection lifts appropriate to the kind.
bool center_check(const MonomialCoverElem& x);

// Upper unitriangular matrix over the residue field, tagged with a block
// composition. Entries may sit anywhere strictly above the diagonal; the
// element lies in the block group iff every nonzero entry is strictly above
// the block diagonal.
class BlockUnipotent {
 public:
  BlockUnipotent(const ResidueField& F, std::vector<int> composition);

  const ResidueField& field() const { return *field_; }
  int dim() const { return n_; }
  const std::vector<int>& composition() const { return comp_; }

  void set(int i, int j, uint32_t value);  // requires i < j
  uint32_t get(int i, int j) const;
  bool in_block_group() const;
  bool operator==(const BlockUnipotent& o) const;

 private:
  bool above_block_diagonal(int i, int j) const;

  const ResidueField* field_;
  std::vector<int> comp_;
  int n_;
  std::vector<uint32_t> ent_;
};

// Additive character x -> exp(2 pi i lift(scale*x) / p) of F_q (prime q = p).
struct AdditiveCharacter {
  uint32_t scale = 1;
  std::complex<double> operator()(const ResidueField& F, uint32_t x) const;
};

// Character of V_{(c^l)}: psi applied to the trace sum of the l-1
// superdiagonal c x c blocks. Requires the composition to be (c^l).
std::complex<double> psi_block_character(const BlockUnipotent& v,
                                         const AdditiveCharacter& psi = {});

enum class ConjDirection { Forward, Inverse };  // x v x^{-1} or x^{-1} v x

struct ConjCertificate {
  bool mu_unchanged = true;  // the cover conjugation rule applied: eps is fixed
  bool composition_kept = true;  // result still lies in the block group
  std::string rule;
};

// Conjugate a block unipotent by a monomial cover element: entries move to
// the permuted positions scaled by torus ratios, and the mu_m component of
// <v,1> is unchanged. A nonzero entry landing on or below the diagonal, or
// gaining a pole, is a domain_error since no rule determines the value; an
// entry landing inside a diagonal block is representable and reported via
// composition_kept = false.
std::pair<BlockUnipotent, ConjCertificate> conj_by_monomial(
    const MonomialCoverElem& x, const BlockUnipotent& v,
    ConjDirection direction = ConjDirection::Forward);

}  // namespace mwb
