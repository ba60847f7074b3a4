#pragma once

// Parabolic induction and Harish-Chandra restriction of class functions, the
// constructors x and ⋊ for GSp(4,q), characters of GL(2,q), and the
// paramodular pairs [s1, s2] with their generic / non-generic halves.
//
// Induction is ordinary (unnormalized) induction.  All Levi characters are
// assembled through the Levi-model matrices: GL(1)^3 as diag(t1, t2, t0),
// GL(2) x GL(1) as blockdiag(A, s), GL(1) x GSp(2) as blockdiag(t, B).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "phr/character_table.hpp"
#include "phr/gsp4.hpp"

namespace phr {

// Inflate a Levi class function through the projection and induce.
ClassFunction induce(const ParabolicDatum& d, const ClassFunction& levi_fn);
// res(C) = (1 / (|U| |C|)) sum_{x in P, pi(x) in C} F(x).
ClassFunction hc_restrict(const ParabolicDatum& d, const ClassFunction& f);

struct PairSplit {
  ClassFunction generic;
  ClassFunction nongeneric;
};

// The campaign environment for one q: models, a common modulus, character
// tables (computed on first use or supplied from a cache) and the character
// constructors.  Safe to share once built; tables are guarded by a mutex.
class Env {
 public:
  static std::shared_ptr<Env> build(unsigned q, std::size_t cap = Group::kDefaultCap);

  unsigned q() const { return models_.q(); }
  const Gsp4Models& models() const { return models_; }
  const Modulus& mod() const { return mod_; }
  const FieldPtr& field() const { return models_.field; }
  const FieldPtr& ext() const { return ext_; }
  const AdditiveChar& psi() const { return *psi_; }
  GroupPtr group(ParahoricKind k) const { return models_.levi_model(k); }

  const CharacterTable& table(ParahoricKind k) const;
  const CharacterTable& gl2_table() const;
  bool has_table(ParahoricKind k) const;
  void provide_table(ParahoricKind k, CharacterTable t);

  // Characters of F_q^x and F_{q^2}^x by generator exponent.
  MultChar chi(std::int64_t e) const { return MultChar(field(), e); }
  MultChar one() const { return chi(0); }
  std::optional<MultChar> lambda0() const;
  MultChar ext_char(std::int64_t l) const { return MultChar(ext_, l); }
  // Central character Lambda restricted to F_q^x.
  MultChar restrict(const MultChar& lam) const { return lam.restrict_to_base(field()); }

  // GL(2,q) = GSp(2,q).
  ClassFunction gl2_one(const MultChar& mu) const;
  ClassFunction gl2_st(const MultChar& mu) const;
  ClassFunction gl2_ps(const MultChar& a, const MultChar& b) const;
  ClassFunction gl2_cusp(const MultChar& lam) const;
  ClassFunction gl1sq(const MultChar& a, const MultChar& b) const;

  // Levi characters.
  ClassFunction levi_b(const MultChar& a1, const MultChar& a2, const MultChar& a0) const;
  ClassFunction levi_p(const ClassFunction& sigma, const MultChar& mu0) const;
  ClassFunction levi_q(const MultChar& mu1, const ClassFunction& sigma) const;

  // mu1 x mu2 ⋊ mu0, sigma ⋊ mu0, mu1 ⋊ sigma.
  ClassFunction borel(const MultChar& mu1, const MultChar& mu2, const MultChar& mu0) const;
  ClassFunction siegel(const ClassFunction& sigma, const MultChar& mu0) const;
  ClassFunction klingen(const MultChar& mu1, const ClassFunction& sigma) const;

  // A, B, C sums on the Iwahori, Klingen and Siegel Levi models.
  ClassFunction abc(char kind, const MultChar& mu1, const MultChar& mu2, const MultChar& mu0) const;

  // Restriction of s1 ⊠ s2 to the paramodular model.
  ClassFunction pair(const ClassFunction& s1, const ClassFunction& s2) const;
  // Throws DomainError unless the pair has exactly two constituents of equal degree.
  PairSplit split(const ClassFunction& pair) const;
  bool splits(const ClassFunction& pair) const;

  // Paramodular models: Ind from {(a upper, b)} of mu1(a11) sigma(b), and
  // from {(a upper, b upper)} of mu1(a11) mu2(b11).
  ClassFunction klingen_pair_model(const MultChar& mu1, const ClassFunction& sigma) const;
  ClassFunction siegel_pair_model(const MultChar& mu1, const MultChar& mu2) const;

  // F (mu o sim) on the K, P, Q, B models and F (mu o det a) on the J model.
  ClassFunction twist(ParahoricKind target, const MultChar& mu, const ClassFunction& f) const;
  // F with the paramodular swap applied.
  ClassFunction swapped(const ClassFunction& f) const;

  const ClassFunction& gelfand_graev(ParahoricKind k) const;  // K or J
  const ClassFunction& gelfand_graev_gl2() const { return gg_gl2_; }
  std::int64_t whittaker(const ClassFunction& chi) const;

  // Linear character of F_q^x evaluated at a field element, in Z/l.
  std::uint32_t value(const MultChar& mu, Elem x) const { return mult_char_value(mod_, mu, x); }
  const ParabolicDatum& datum(ParahoricKind levi) const;  // B, P or Q inside K

 private:
  Env() = default;
  ClassFunction linear_on(const GroupPtr& g, const std::function<std::uint32_t(const Mat&)>& f) const;

  Gsp4Models models_;
  Modulus mod_;
  FieldPtr ext_;
  std::optional<AdditiveChar> psi_;
  ClassFunction gg_k_, gg_j_, gg_gl2_;
  Subgroup zn_, torus_e_, j_klingen_model_, j_siegel_model_;

  mutable std::mutex mu_;
  mutable std::map<ParahoricKind, std::shared_ptr<const CharacterTable>> tables_;
  mutable std::shared_ptr<const CharacterTable> gl2_table_;
};

using EnvPtr = std::shared_ptr<Env>;

// Lcm of the exponents of every group in the environment, q^2-1 and p.
std::uint64_t campaign_exponent(const Gsp4Models& m);

}  // namespace phr
