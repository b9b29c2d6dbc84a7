#include "mwb/cover.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mwb {

namespace {

int mirror_index(int dim, int i) { return dim - 1 - i; }
int eta_sign(int dim, int i) { return i < dim / 2 ? 1 : -1; }

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// (^w t)_i = t_{pi^{-1}(i)} for the pure permutation w e_j = e_{pi(j)}.
std::vector<LocalFieldElem> permuted_torus(const std::vector<int>& perm,
                                           const std::vector<LocalFieldElem>& t) {
  std::vector<LocalFieldElem> s(t.size());
  for (size_t j = 0; j < perm.size(); ++j) s[perm[j]] = t[j];
  return s;
}

// Correction in <t1 w1, e1><t2 w2, e2> = <t1 ^{w1}t2 (w1 w2), e1 e2 corr>:
//   corr = prod_{i<j, p1(i)>p1(j)} (t2_j, t2_i) * prod_{i<j} (t1_i, (^{w1}t2)_j).
// The first product is the conjugation correction of the inverted roots, the
// second the plain torus 2-cocycle.
RootOfUnity plain_correction(const ResidueField& F,
                             const std::vector<LocalFieldElem>& t1,
                             const std::vector<int>& p1,
                             const std::vector<LocalFieldElem>& t2) {
  const int n = (int)t1.size();
  RootOfUnity acc = RootOfUnity::identity(F.m());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p1[i] > p1[j]) acc = acc * hilbert_symbol(F, t2[j], t2[i]);
  const auto s = permuted_torus(p1, t2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc = acc * hilbert_symbol(F, t1[i], s[j]);
  return acc;
}

// diag(b, b*) with b* = J (b^T)^{-1} J and J the antidiagonal:
//   perm*(j) = (d-1) - perm((d-1)-j), t*_i = t_{(d-1)-i}^{-1}.
void embed_diamond(const ResidueField& F, const std::vector<LocalFieldElem>& t,
                   const std::vector<int>& perm, std::vector<LocalFieldElem>& te,
                   std::vector<int>& pe) {
  const int d = (int)t.size();
  te.resize(2 * d);
  pe.resize(2 * d);
  for (int j = 0; j < d; ++j) {
    te[j] = t[j];
    pe[j] = perm[j];
  }
  for (int i = 0; i < d; ++i) te[d + i] = local_inv(F, t[(d - 1) - i]);
  for (int j = 0; j < d; ++j) pe[d + j] = d + (d - 1) - perm[(d - 1) - j];
}

RootOfUnity mul_correction(GroupKind kind, const ResidueField& F,
                           const std::vector<LocalFieldElem>& t1,
                           const std::vector<int>& p1,
                           const std::vector<LocalFieldElem>& t2) {
  if (kind != GroupKind::GLinSp) return plain_correction(F, t1, p1, t2);
  std::vector<LocalFieldElem> t1e, t2e;
  std::vector<int> p1e, p2e;
  embed_diamond(F, t1, p1, t1e, p1e);
  embed_diamond(F, t2, identity_perm((int)t2.size()), t2e, p2e);
  return plain_correction(F, t1e, p1e, t2e);
}

int perm_parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

void validate_permutation(const std::vector<int>& perm) {
  const int n = (int)perm.size();
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw input_error("permutation images must be a rearrangement of 0..n-1");
    seen[v] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int d) {
  if (d < 0) throw input_error("permutation size must be nonnegative");
  SignedPermutation w;
  w.perm = identity_perm(d);
  w.signs.assign(d, 1);
  return w;
}

SignedPermutation SignedPermutation::transposition(int d, int i, int j) {
  if (i < 0 || j < 0 || i >= d || j >= d || i == j)
    throw input_error("transposition needs two distinct indices in range");
  SignedPermutation w = identity(d);
  std::swap(w.perm[i], w.perm[j]);
  return w;
}

bool SignedPermutation::is_pure() const {
  for (int s : signs)
    if (s != 1) return false;
  return true;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (dim() != other.dim()) throw input_error("permutation size mismatch");
  SignedPermutation r;
  r.perm.resize(dim());
  r.signs.resize(dim());
  for (int j = 0; j < dim(); ++j) {
    r.perm[j] = perm[other.perm[j]];
    r.signs[j] = other.signs[j] * signs[other.perm[j]];
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.perm.resize(dim());
  r.signs.resize(dim());
  for (int j = 0; j < dim(); ++j) {
    r.perm[perm[j]] = j;
    r.signs[perm[j]] = signs[j];
  }
  return r;
}

int SignedPermutation::parity_sign() const { return perm_parity(perm); }

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "gl";
    case GroupKind::Sp: return "sp";
    case GroupKind::GLinSp: return "gl-levi";
  }
  throw input_error("unknown group kind");
}

MonomialCoverElem::MonomialCoverElem(GroupKind kind, const ResidueField& F,
                                     std::vector<LocalFieldElem> t,
                                     std::vector<int> perm, RootOfUnity eps)
    : kind_(kind), field_(&F), torus_(std::move(t)), perm_(std::move(perm)), eps_(eps) {
  if (torus_.size() != perm_.size())
    throw input_error("torus and permutation sizes differ");
  validate_permutation(perm_);
  if (eps_.modulus() != F.m())
    throw input_error("mu_m part has the wrong modulus for the field");
  for (const auto& e : torus_)
    if (e.unit == 0 || e.unit >= F.q())
      throw input_error("torus units must be nonzero residues");
  if (kind_ == GroupKind::Sp) {
    const int n = dim();
    if (n % 2 != 0) throw input_error("symplectic elements need even size");
    for (int j = 0; j < n; ++j) {
      if (perm_[mirror_index(n, j)] != mirror_index(n, perm_[j]))
        throw input_error("symplectic monomial must pair mirrored coordinates");
      const auto prod =
          local_mul(F, torus_[perm_[j]], torus_[perm_[mirror_index(n, j)]]);
      const int want = eta_sign(n, j) * eta_sign(n, perm_[j]);
      if (prod.valuation != 0 || prod.unit != (want == 1 ? 1u : F.neg(1)))
        throw input_error("symplectic torus entries must multiply to eta(j) eta(pi(j)) on mirrored pairs");
    }
  }
}

MonomialCoverElem MonomialCoverElem::identity(GroupKind kind, const ResidueField& F,
                                              int dim) {
  if (dim < 0) throw input_error("size must be nonnegative");
  return MonomialCoverElem(kind, F,
                           std::vector<LocalFieldElem>(dim, local_one()),
                           identity_perm(dim), RootOfUnity::identity(F.m()));
}

MonomialCoverElem MonomialCoverElem::torus(GroupKind kind, const ResidueField& F,
                                           std::vector<LocalFieldElem> t,
                                           RootOfUnity eps) {
  const int n = (int)t.size();
  return MonomialCoverElem(kind, F, std::move(t), identity_perm(n), eps);
}

MonomialCoverElem MonomialCoverElem::torus(GroupKind kind, const ResidueField& F,
                                           std::vector<LocalFieldElem> t) {
  return torus(kind, F, std::move(t), RootOfUnity::identity(F.m()));
}

MonomialCoverElem MonomialCoverElem::weyl(GroupKind kind, const ResidueField& F,
                                          const SignedPermutation& w) {
  return from_parts(kind, F,
                    std::vector<LocalFieldElem>(w.perm.size(), local_one()), w,
                    RootOfUnity::identity(F.m()));
}

MonomialCoverElem MonomialCoverElem::from_parts(GroupKind kind, const ResidueField& F,
                                                std::vector<LocalFieldElem> t,
                                                const SignedPermutation& w,
                                                RootOfUnity eps) {
  if (t.size() != w.perm.size() || w.perm.size() != w.signs.size())
    throw input_error("torus and permutation sizes differ");
  validate_permutation(w.perm);
  // Absorb signs into the torus: t w = (t d) p with d_{pi(j)} = sign_j. This
  // changes no cocycle value because (u, -1)_m = 1.
  for (size_t j = 0; j < w.perm.size(); ++j) {
    const int s = w.signs[j];
    if (s != 1 && s != -1) throw input_error("signs must be +-1");
    if (s == -1) t[w.perm[j]].unit = F.neg(t[w.perm[j]].unit);
  }
  return MonomialCoverElem(kind, F, std::move(t), w.perm, eps);
}

bool MonomialCoverElem::is_torus() const {
  for (int j = 0; j < dim(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

bool MonomialCoverElem::is_identity_matrix() const {
  if (!is_torus()) return false;
  for (const auto& e : torus_)
    if (!(e == local_one())) return false;
  return true;
}

bool MonomialCoverElem::same_matrix(const MonomialCoverElem& o) const {
  return kind_ == o.kind_ && *field_ == *o.field_ && torus_ == o.torus_ &&
         perm_ == o.perm_;
}

bool MonomialCoverElem::operator==(const MonomialCoverElem& o) const {
  return same_matrix(o) && eps_ == o.eps_;
}

MonomialCoverElem MonomialCoverElem::with_eps(RootOfUnity eps) const {
  return MonomialCoverElem(kind_, *field_, torus_, perm_, eps);
}

std::string MonomialCoverElem::str() const {
  std::ostringstream os;
  os << "<" << kind_name(kind_) << " t=[";
  for (int i = 0; i < dim(); ++i) os << (i ? "," : "") << local_str(*field_, torus_[i]);
  os << "] w=[" << join_ints(perm_) << "] " << eps_.str() << ">";
  return os.str();
}

RootOfUnity cocycle_gl_torus(const ResidueField& F,
                             const std::vector<LocalFieldElem>& t,
                             const std::vector<LocalFieldElem>& u) {
  if (t.size() != u.size()) throw input_error("torus size mismatch");
  RootOfUnity acc = RootOfUnity::identity(F.m());
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      acc = acc * hilbert_symbol(F, t[i], u[j]);
  return acc;
}

RootOfUnity cocycle_sp_torus(const ResidueField& F,
                             const std::vector<LocalFieldElem>& t,
                             const std::vector<LocalFieldElem>& u) {
  if (t.size() != u.size()) throw input_error("torus size mismatch");
  RootOfUnity acc = RootOfUnity::identity(F.m());
  for (size_t i = 0; i < t.size(); ++i)
    acc = acc * hilbert_symbol(F, t[i], u[i]).inverse();
  return acc;
}

std::vector<LocalFieldElem> sp_torus_expand(const ResidueField& F,
                                            const std::vector<LocalFieldElem>& t) {
  const int d = (int)t.size();
  std::vector<LocalFieldElem> out(2 * d);
  for (int i = 0; i < d; ++i) {
    out[i] = t[i];
    out[d + i] = local_inv(F, t[(d - 1) - i]);
  }
  return out;
}

RootOfUnity cocycle_diamond_torus(const ResidueField& F,
                                  const std::vector<LocalFieldElem>& t,
                                  const std::vector<LocalFieldElem>& u,
                                  DiamondRoute route) {
  if (t.size() != u.size()) throw input_error("torus size mismatch");
  if (route == DiamondRoute::Direct) return cocycle_sp_torus(F, t, u);
  return cocycle_gl_torus(F, sp_torus_expand(F, t), sp_torus_expand(F, u));
}

MonomialCoverElem monomial_mul(const MonomialCoverElem& x, const MonomialCoverElem& y) {
  if (x.kind() != y.kind()) throw input_error("cover product across group kinds");
  if (!(x.field() == y.field())) throw input_error("cover product across fields");
  if (x.dim() != y.dim()) throw input_error("cover product across sizes");
  const ResidueField& F = x.field();
  const auto& t1 = x.torus_part();
  const auto& p1 = x.perm_part();
  const auto& t2 = y.torus_part();
  const auto& p2 = y.perm_part();

  const RootOfUnity eps = x.eps() * y.eps() * mul_correction(x.kind(), F, t1, p1, t2);
  const auto s = permuted_torus(p1, t2);
  const int n = x.dim();
  std::vector<LocalFieldElem> t(n);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) t[i] = local_mul(F, t1[i], s[i]);
  for (int j = 0; j < n; ++j) p[j] = p1[p2[j]];
  SignedPermutation w;
  w.perm = std::move(p);
  w.signs.assign(n, 1);
  return MonomialCoverElem::from_parts(x.kind(), F, std::move(t), w, eps);
}

MonomialCoverElem monomial_inv(const MonomialCoverElem& x) {
  const ResidueField& F = x.field();
  const int n = x.dim();
  const auto& t = x.torus_part();
  const auto& p = x.perm_part();
  std::vector<LocalFieldElem> s(n);
  std::vector<int> pinv(n);
  for (int j = 0; j < n; ++j) {
    s[j] = local_inv(F, t[p[j]]);
    pinv[p[j]] = j;
  }
  SignedPermutation w;
  w.perm = std::move(pinv);
  w.signs.assign(n, 1);
  auto cand = MonomialCoverElem::from_parts(x.kind(), F, std::move(s), w,
                                            RootOfUnity::identity(F.m()));
  const auto z = monomial_mul(x.with_eps(RootOfUnity::identity(F.m())), cand);
  return cand.with_eps((x.eps() * z.eps()).inverse());
}

MonomialCoverElem conj_elem(const MonomialCoverElem& x, const MonomialCoverElem& y) {
  return monomial_mul(monomial_mul(x, y), monomial_inv(x));
}

LocalFieldElem monomial_det(const MonomialCoverElem& x) {
  const ResidueField& F = x.field();
  LocalFieldElem acc = local_one();
  for (const auto& e : x.torus_part()) acc = local_mul(F, acc, e);
  if (perm_parity(x.perm_part()) < 0) acc.unit = F.neg(acc.unit);
  return acc;
}

namespace {

RootOfUnity torus_cocycle_value(CocycleTag tag, const ResidueField& F,
                                const std::vector<LocalFieldElem>& t,
                                const std::vector<LocalFieldElem>& u) {
  switch (tag) {
    case CocycleTag::GL: return cocycle_gl_torus(F, t, u);
    case CocycleTag::Sp: return cocycle_sp_torus(F, t, u);
    case CocycleTag::Diamond: return cocycle_diamond_torus(F, t, u);
    case CocycleTag::SquareDet: {
      const auto s = cocycle_gl_torus(F, t, u);
      LocalFieldElem dt = local_one(), du = local_one();
      for (const auto& e : t) dt = local_mul(F, dt, e);
      for (const auto& e : u) du = local_mul(F, du, e);
      return s * s * hilbert_symbol(F, dt, du).inverse();
    }
  }
  throw input_error("unknown cocycle tag");
}

}  // namespace

RootOfUnity commutator_pairing(CocycleTag tag, const ResidueField& F,
                               const std::vector<LocalFieldElem>& t,
                               const std::vector<LocalFieldElem>& u) {
  return torus_cocycle_value(tag, F, t, u) *
         torus_cocycle_value(tag, F, u, t).inverse();
}

RootOfUnity commutator_pairing(const MonomialCoverElem& x, const MonomialCoverElem& y) {
  const auto xy = monomial_mul(x, y);
  const auto yx = monomial_mul(y, x);
  if (!xy.same_matrix(yx))
    throw input_error("commutator pairing needs commuting matrices");
  return xy.eps() * yx.eps().inverse();
}

MonomialCoverElem star_involution(const MonomialCoverElem& x) {
  if (x.kind() != GroupKind::GLinSp)
    throw input_error("star involution lives on the Siegel-Levi cover");
  const ResidueField& F = x.field();
  const int d = x.dim();
  std::vector<LocalFieldElem> ts(d);
  std::vector<int> ps(d);
  for (int i = 0; i < d; ++i) ts[i] = local_inv(F, x.torus_part()[(d - 1) - i]);
  for (int j = 0; j < d; ++j) ps[j] = (d - 1) - x.perm_part()[(d - 1) - j];
  SignedPermutation w;
  w.perm = std::move(ps);
  w.signs.assign(d, 1);
  return MonomialCoverElem::from_parts(x.kind(), F, std::move(ts), w, x.eps());
}

MonomialCoverElem block_diag(const MonomialCoverElem& a, const MonomialCoverElem& b) {
  if (a.kind() != b.kind() || !(a.field() == b.field()))
    throw input_error("block pairing needs matching kind and field");
  const int da = a.dim(), db = b.dim();
  std::vector<LocalFieldElem> t(da + db);
  std::vector<int> p(da + db);
  for (int i = 0; i < da; ++i) {
    t[i] = a.torus_part()[i];
    p[i] = a.perm_part()[i];
  }
  for (int i = 0; i < db; ++i) {
    t[da + i] = b.torus_part()[i];
    p[da + i] = da + b.perm_part()[i];
  }
  SignedPermutation w;
  w.perm = std::move(p);
  w.signs.assign(da + db, 1);
  return MonomialCoverElem::from_parts(a.kind(), a.field(), std::move(t), w,
                                       a.eps() * b.eps());
}

MonomialCoverElem diag_embed(const MonomialCoverElem& x, uint32_t copies) {
  if (copies == 0) throw input_error("diagonal embedding needs at least one copy");
  if ((uint64_t)copies * x.dim() > 4096)
    throw input_error("embedded size out of supported range");
  const int d = x.dim();
  std::vector<LocalFieldElem> t((size_t)d * copies);
  std::vector<int> p((size_t)d * copies);
  for (uint32_t c = 0; c < copies; ++c)
    for (int i = 0; i < d; ++i) {
      t[(size_t)c * d + i] = x.torus_part()[i];
      p[(size_t)c * d + i] = (int)(c * d) + x.perm_part()[i];
    }
  SignedPermutation w;
  w.perm = std::move(p);
  w.signs.assign((size_t)d * copies, 1);
  return MonomialCoverElem::from_parts(x.kind(), x.field(), std::move(t), w, x.eps());
}

MonomialCoverElem doubling_embed_gl(const MonomialCoverElem& g1,
                                    const MonomialCoverElem& g2,
                                    uint32_t r, uint32_t k) {
  if (g1.kind() != GroupKind::GLinSp || g2.kind() != GroupKind::GLinSp)
    throw input_error("doubling embedding lives on the Siegel-Levi cover");
  if (!(g1.field() == g2.field()) || g1.dim() != g2.dim())
    throw input_error("doubling embedding needs matching field and size");
  if (r == 0 || k == 0) throw input_error("doubling parameters must be positive");
  const uint32_t m = g1.field().m();
  if ((2ull * r * k) % m != 0)
    throw input_error("doubling embedding needs m | 2rk");
  const uint64_t n = (uint64_t)r * k;
  if (2 * n * g1.dim() > 4096)
    throw input_error("embedded size out of supported range");
  auto top = diag_embed(g1.with_eps(RootOfUnity::identity(m)), (uint32_t)n);
  auto mid = block_diag(top, g2.with_eps(RootOfUnity::identity(m)));
  auto full = (n > 1)
                  ? block_diag(mid, diag_embed(g1.with_eps(RootOfUnity::identity(m)),
                                               (uint32_t)(n - 1)))
                  : mid;
  return full.with_eps(g1.eps().inverse() * g2.eps());
}

std::pair<RootOfUnity, RootOfUnity> diag_embed_power(const MonomialCoverElem& x,
                                                     const MonomialCoverElem& y,
                                                     uint32_t r, uint32_t k) {
  if (x.kind() != GroupKind::GLinSp || y.kind() != GroupKind::GLinSp)
    throw input_error("diagonal power identity lives on the Siegel-Levi cover");
  if (r == 0 || k == 0) throw input_error("embedding parameters must be positive");
  const uint32_t n = r * k;
  const RootOfUnity one = RootOfUnity::identity(x.field().m());
  const auto lhs =
      monomial_mul(diag_embed(x.with_eps(one), n), diag_embed(y.with_eps(one), n)).eps();
  const auto rhs = monomial_mul(x.with_eps(one), y.with_eps(one)).eps().pow(n);
  return {lhs, rhs};
}

bool center_check(const MonomialCoverElem& x) {
  const ResidueField& F = x.field();
  const RootOfUnity one = RootOfUnity::identity(F.m());
  std::vector<MonomialCoverElem> gens;
  const int n = x.dim();
  if (x.kind() == GroupKind::Sp) {
    const int d = n / 2;
    for (int i = 0; i < d; ++i)
      for (const auto seed : {local_elem(F, 0, F.generator()), local_uniformizer()}) {
        std::vector<LocalFieldElem> free(d, local_one());
        free[i] = seed;
        gens.push_back(MonomialCoverElem::torus(GroupKind::Sp, F,
                                                sp_torus_expand(F, free), one));
      }
    for (int i = 0; i + 1 < d; ++i) {
      auto w = SignedPermutation::identity(n);
      std::swap(w.perm[i], w.perm[i + 1]);
      std::swap(w.perm[mirror_index(n, i + 1)], w.perm[mirror_index(n, i)]);
      gens.push_back(MonomialCoverElem::weyl(GroupKind::Sp, F, w));
    }
    if (d > 0) {
      auto w = SignedPermutation::identity(n);
      std::swap(w.perm[d - 1], w.perm[d]);
      w.signs[d - 1] = -1;
      gens.push_back(MonomialCoverElem::weyl(GroupKind::Sp, F, w));
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (const auto seed : {local_elem(F, 0, F.generator()), local_uniformizer()}) {
        std::vector<LocalFieldElem> t(n, local_one());
        t[i] = seed;
        gens.push_back(MonomialCoverElem::torus(x.kind(), F, t, one));
      }
    for (int i = 0; i + 1 < n; ++i)
      gens.push_back(
          MonomialCoverElem::weyl(x.kind(), F, SignedPermutation::transposition(n, i, i + 1)));
  }
  for (const auto& s : gens)
    if (!(monomial_mul(x, s) == monomial_mul(s, x))) return false;
  return true;
}

BlockUnipotent::BlockUnipotent(const ResidueField& F, std::vector<int> composition)
    : field_(&F), comp_(std::move(composition)) {
  n_ = 0;
  for (int c : comp_) {
    if (c <= 0) throw input_error("composition parts must be positive");
    n_ += c;
  }
  ent_.assign((size_t)n_ * n_, 0);
}

bool BlockUnipotent::above_block_diagonal(int i, int j) const {
  int start = 0, bi = -1, bj = -1;
  for (size_t b = 0; b < comp_.size(); ++b) {
    if (i >= start && i < start + comp_[b]) bi = (int)b;
    if (j >= start && j < start + comp_[b]) bj = (int)b;
    start += comp_[b];
  }
  return bi < bj;
}

void BlockUnipotent::set(int i, int j, uint32_t value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i >= j)
    throw input_error("entries live strictly above the diagonal");
  ent_[(size_t)i * n_ + j] = value % field_->q();
}

uint32_t BlockUnipotent::get(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw input_error("entry index out of range");
  if (i == j) return 1;
  if (i > j) return 0;
  return ent_[(size_t)i * n_ + j];
}

bool BlockUnipotent::in_block_group() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (ent_[(size_t)i * n_ + j] != 0 && !above_block_diagonal(i, j)) return false;
  return true;
}

bool BlockUnipotent::operator==(const BlockUnipotent& o) const {
  return *field_ == *o.field_ && comp_ == o.comp_ && ent_ == o.ent_;
}

std::complex<double> AdditiveCharacter::operator()(const ResidueField& F,
                                                   uint32_t x) const {
  const uint64_t v = (uint64_t)(scale % F.q()) * (x % F.q()) % F.q();
  const double ang = 2.0 * std::numbers::pi * (double)v / (double)F.q();
  return {std::cos(ang), std::sin(ang)};
}

std::complex<double> psi_block_character(const BlockUnipotent& v,
                                         const AdditiveCharacter& psi) {
  const auto& comp = v.composition();
  if (comp.empty()) throw input_error("character needs a nonempty composition");
  const int c = comp[0];
  for (int part : comp)
    if (part != c) throw input_error("character needs equal composition parts");
  const int l = (int)comp.size();
  uint32_t sum = 0;
  for (int a = 0; a + 1 < l; ++a)
    for (int s = 0; s < c; ++s)
      sum = v.field().add(sum, v.get(a * c + s, (a + 1) * c + s));
  return psi(v.field(), sum);
}

std::pair<BlockUnipotent, ConjCertificate> conj_by_monomial(
    const MonomialCoverElem& x, const BlockUnipotent& v, ConjDirection direction) {
  if (!(x.field() == v.field()))
    throw input_error("conjugation across fields");
  if (x.dim() != v.dim()) throw input_error("conjugation size mismatch");
  const MonomialCoverElem g =
      direction == ConjDirection::Forward ? x : monomial_inv(x);
  const ResidueField& F = g.field();
  const auto& t = g.torus_part();
  const auto& p = g.perm_part();
  BlockUnipotent out(v.field(), v.composition());
  const int n = v.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const uint32_t val = v.get(i, j);
      if (val == 0) continue;
      const int a = p[i], b = p[j];
      if (a >= b)
        throw domain_error("conjugation moved an entry onto or below the diagonal");
      const auto scale = local_mul(F, t[a], local_inv(F, t[b]));
      if (scale.valuation < 0)
        throw domain_error("conjugation gave an entry a pole");
      if (scale.valuation > 0) continue;
      out.set(a, b, F.mul(scale.unit, val));
    }
  ConjCertificate cert;
  cert.mu_unchanged = true;
  cert.composition_kept = out.in_block_group();
  cert.rule = "entries move to permuted positions scaled by torus ratios; mu_m part unchanged";
  return {std::move(out), cert};
}

}  // namespace mwb
