#include "phr/indres.hpp"

#include <numeric>

#include "phr/error.hpp"

namespace phr {

ClassFunction induce(const ParabolicDatum& d, const ClassFunction& levi_fn) {
  if (levi_fn.group() != d.levi) throw DomainError("induce: function does not live on the Levi of " + d.name);
  const auto& img = d.projection.image;
  std::vector<std::uint32_t> per(img.size());
  for (Id i = 0; i < per.size(); ++i) per[i] = levi_fn.at(img[i]);
  return induce_from_subgroup(d.parabolic, levi_fn.modulus(), per);
}

ClassFunction hc_restrict(const ParabolicDatum& d, const ClassFunction& f) {
  if (f.group() != d.ambient) throw DomainError("hc_restrict: function does not live on " + d.ambient->name());
  const Modulus& m = f.modulus();
  const auto& lc = d.levi->classes();
  std::vector<std::uint32_t> sums(lc.count(), 0);
  const auto& img = d.projection.image;
  for (Id i = 0; i < img.size(); ++i) {
    Id c = lc.class_of[img[i]];
    sums[c] = m.add(sums[c], f.at(d.parabolic.to_parent[i]));
  }
  const std::uint64_t u = d.radical.group->order();
  for (std::size_t c = 0; c < lc.count(); ++c)
    sums[c] = m.mul(sums[c], m.inv(m.from_int(static_cast<std::int64_t>((u * lc.sizes[c]) % m.ell))));
  return ClassFunction::from_values(d.levi, m, std::move(sums));
}

std::uint64_t campaign_exponent(const Gsp4Models& m) {
  std::uint64_t e = 1;
  for (const GroupPtr& g : {m.gsp4, m.j0, m.levi_b, m.levi_p, m.levi_q, m.gl2, m.gl1sq, m.gl1})
    e = std::lcm(e, g->exponent());
  const std::uint64_t q = m.q();
  e = std::lcm(e, q * q - 1);
  e = std::lcm(e, std::uint64_t{m.field->characteristic()});
  return e;
}

std::shared_ptr<Env> Env::build(unsigned q, std::size_t cap) {
  if (!is_prime(q)) throw DomainError("the campaign environment needs a prime q");
  std::shared_ptr<Env> env(new Env());
  Env& E = *env;
  E.models_ = build_models(q, cap);
  E.mod_ = make_modulus(campaign_exponent(E.models_), 2 * E.models_.gsp4->order());
  E.ext_ = Field::build(q, 2);
  E.psi_.emplace(E.models_.field);
  const Field& F = *E.models_.field;
  const Modulus& m = E.mod_;
  const auto& M = E.models_;

  auto gg = [&](const Subgroup& u, const std::function<Elem(const Mat&)>& arg) {
    std::vector<std::uint32_t> v(u.group->order());
    for (Id i = 0; i < v.size(); ++i) v[i] = add_char_value(m, *E.psi_, arg(u.group->element(i)));
    check_linear_character(u, m, v);
    return induce_from_subgroup(u, m, v);
  };
  E.gg_k_ = gg(M.unipotent_b, [&](const Mat& x) { return F.add(x(0, 1), x(1, 3)); });
  E.gg_j_ = gg(M.unipotent_j, [&](const Mat& x) { return F.add(x(0, 1), x(2, 3)); });
  E.gg_gl2_ = gg(M.unipotent_gl2, [](const Mat& x) { return x(0, 1); });

  E.zn_ = subgroup(M.gl2, [](const Mat& x) { return x(1, 0) == 0 && x(0, 0) == x(1, 1); }, "ZN");
  auto [c0, c1] = E.ext_->modulus();
  E.torus_e_ = subgroup(
      M.gl2,
      [&, c0 = c0, c1 = c1](const Mat& x) {
        Elem a = x(0, 0), b = x(1, 0);
        return x(0, 1) == F.mul(b, c0) && x(1, 1) == F.add(a, F.mul(b, c1));
      },
      "T_e");
  E.j_klingen_model_ = subgroup(M.j0, [](const Mat& x) { return x(1, 0) == 0; }, "J cap Q");
  E.j_siegel_model_ = subgroup(M.j0, [](const Mat& x) { return x(1, 0) == 0 && x(3, 2) == 0; }, "J cap P");
  return env;
}

const CharacterTable& Env::table(ParahoricKind k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = tables_.find(k);
  if (it == tables_.end())
    it = tables_.emplace(k, std::make_shared<const CharacterTable>(dixon_table(group(k), mod_))).first;
  return *it->second;
}

const CharacterTable& Env::gl2_table() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!gl2_table_) gl2_table_ = std::make_shared<const CharacterTable>(dixon_table(models_.gl2, mod_));
  return *gl2_table_;
}

bool Env::has_table(ParahoricKind k) const {
  std::lock_guard<std::mutex> lock(mu_);
  return tables_.count(k) > 0;
}

void Env::provide_table(ParahoricKind k, CharacterTable t) {
  if (t.group != group(k) || !(t.mod == mod_)) throw DomainError("supplied table does not match the environment");
  std::lock_guard<std::mutex> lock(mu_);
  tables_[k] = std::make_shared<const CharacterTable>(std::move(t));
}

std::optional<MultChar> Env::lambda0() const {
  if (q() % 2 == 0) return std::nullopt;
  return MultChar::quadratic(field());
}

ClassFunction Env::linear_on(const GroupPtr& g, const std::function<std::uint32_t(const Mat&)>& f) const {
  return ClassFunction::from_element_fn(g, mod_, [&](Id x) { return f(g->element(x)); });
}

ClassFunction Env::gl2_one(const MultChar& mu) const {
  const Field& F = *field();
  return linear_on(models_.gl2, [&](const Mat& x) { return value(mu, det(F, x)); });
}

ClassFunction Env::gl1sq(const MultChar& a, const MultChar& b) const {
  return linear_on(models_.gl1sq, [&](const Mat& x) { return mod_.mul(value(a, x(0, 0)), value(b, x(1, 1))); });
}

ClassFunction Env::gl2_ps(const MultChar& a, const MultChar& b) const {
  return induce(models_.gl2_borel, gl1sq(a, b));
}

ClassFunction Env::gl2_st(const MultChar& mu) const { return gl2_ps(mu, mu) - gl2_one(mu); }

ClassFunction Env::gl2_cusp(const MultChar& lam) const {
  if (lam.field() != ext_) throw DomainError("cuspidal parameter must be a character of F_{q^2}^x");
  if (!lam.is_general_position()) throw DomainError("cuspidal parameter must be in general position");
  const Field& F = *field();
  const MultChar central = restrict(lam);
  std::vector<std::uint32_t> zn(zn_.group->order());
  for (Id i = 0; i < zn.size(); ++i) {
    Mat x = zn_.group->element(i);
    Elem z = x(0, 0);
    zn[i] = mod_.mul(value(central, z), add_char_value(mod_, *psi_, F.mul(x(0, 1), F.inv(z))));
  }
  std::vector<std::uint32_t> te(torus_e_.group->order());
  const unsigned p = field()->characteristic();
  for (Id i = 0; i < te.size(); ++i) {
    Mat x = torus_e_.group->element(i);
    te[i] = mult_char_value(mod_, lam, static_cast<Elem>(x(0, 0) + x(1, 0) * p));
  }
  return induce_from_subgroup(zn_, mod_, zn) - induce_from_subgroup(torus_e_, mod_, te);
}

ClassFunction Env::levi_b(const MultChar& a1, const MultChar& a2, const MultChar& a0) const {
  return linear_on(models_.levi_b, [&](const Mat& x) {
    return mod_.mul(mod_.mul(value(a1, x(0, 0)), value(a2, x(1, 1))), value(a0, x(2, 2)));
  });
}

ClassFunction Env::levi_p(const ClassFunction& sigma, const MultChar& mu0) const {
  const GroupPtr& g = models_.levi_p;
  const GroupPtr& gl2 = models_.gl2;
  return ClassFunction::from_element_fn(g, mod_, [&](Id i) {
    Mat x = g->element(i);
    return mod_.mul(sigma.at(gl2->id_of(submatrix(x, {0, 1}, {0, 1}))), value(mu0, x(2, 2)));
  });
}

ClassFunction Env::levi_q(const MultChar& mu1, const ClassFunction& sigma) const {
  const GroupPtr& g = models_.levi_q;
  const GroupPtr& gl2 = models_.gl2;
  return ClassFunction::from_element_fn(g, mod_, [&](Id i) {
    Mat x = g->element(i);
    return mod_.mul(value(mu1, x(0, 0)), sigma.at(gl2->id_of(submatrix(x, {1, 2}, {1, 2}))));
  });
}

ClassFunction Env::borel(const MultChar& mu1, const MultChar& mu2, const MultChar& mu0) const {
  return induce(models_.borel, levi_b(mu1, mu2, mu0));
}

ClassFunction Env::siegel(const ClassFunction& sigma, const MultChar& mu0) const {
  return induce(models_.siegel, levi_p(sigma, mu0));
}

ClassFunction Env::klingen(const MultChar& mu1, const ClassFunction& sigma) const {
  return induce(models_.klingen, levi_q(mu1, sigma));
}

ClassFunction Env::abc(char kind, const MultChar& mu1, const MultChar& mu2, const MultChar& mu0) const {
  // GSp(2) principal series mu ⋊ chi is the GL(2) series (mu chi) x chi.
  auto gsp2_ps = [&](const MultChar& mu, const MultChar& c) { return gl2_ps(mu * c, c); };
  switch (kind) {
    case 'A':
      return levi_b(mu1, mu2, mu0) + levi_b(mu1, mu2.inverse(), mu2 * mu0) + levi_b(mu1.inverse(), mu2, mu1 * mu0) +
             levi_b(mu1.inverse(), mu2.inverse(), mu1 * mu2 * mu0);
    case 'B':
      return levi_q(mu1, gsp2_ps(mu2, mu0)) + levi_q(mu1.inverse(), gsp2_ps(mu2, mu1 * mu0));
    case 'C':
      return levi_p(gl2_ps(mu1, mu2), mu0) + levi_p(gl2_ps(mu1.inverse(), mu2), mu1 * mu0);
  }
  throw DomainError(std::string("unknown sum ") + kind);
}

ClassFunction Env::pair(const ClassFunction& s1, const ClassFunction& s2) const {
  if (s1.group() != models_.gl2 || s2.group() != models_.gl2) throw DomainError("pair components must live on GL(2)");
  const auto& a = models_.j_first.image;
  const auto& b = models_.j_second.image;
  return ClassFunction::from_element_fn(models_.j0, mod_, [&](Id x) { return mod_.mul(s1.at(a[x]), s2.at(b[x])); });
}

bool Env::splits(const ClassFunction& pr) const { return inner_product(pr, pr) == 2; }

PairSplit Env::split(const ClassFunction& pr) const {
  const auto& t = table(ParahoricKind::J);
  auto mult = t.decompose_character(pr);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 1) throw DomainError("pair has a repeated constituent");
    if (mult[i] == 1) idx.push_back(i);
  }
  if (idx.size() != 2 || t.degrees[idx[0]] != t.degrees[idx[1]])
    throw DomainError("pair does not split into two equidimensional halves");
  const std::int64_t w0 = whittaker(t.irr[idx[0]]), w1 = whittaker(t.irr[idx[1]]);
  if (w0 + w1 != 1) throw ComputationError("pair halves are not exactly one generic");
  return w0 == 1 ? PairSplit{t.irr[idx[0]], t.irr[idx[1]]} : PairSplit{t.irr[idx[1]], t.irr[idx[0]]};
}

ClassFunction Env::klingen_pair_model(const MultChar& mu1, const ClassFunction& sigma) const {
  const auto& h = j_klingen_model_;
  const GroupPtr& gl2 = models_.gl2;
  std::vector<std::uint32_t> v(h.group->order());
  for (Id i = 0; i < v.size(); ++i) {
    Mat x = h.group->element(i);
    v[i] = mod_.mul(value(mu1, x(0, 0)), sigma.at(gl2->id_of(submatrix(x, {2, 3}, {2, 3}))));
  }
  return induce_from_subgroup(h, mod_, v);
}

ClassFunction Env::siegel_pair_model(const MultChar& mu1, const MultChar& mu2) const {
  const auto& h = j_siegel_model_;
  std::vector<std::uint32_t> v(h.group->order());
  for (Id i = 0; i < v.size(); ++i) {
    Mat x = h.group->element(i);
    v[i] = mod_.mul(value(mu1, x(0, 0)), value(mu2, x(2, 2)));
  }
  return induce_from_subgroup(h, mod_, v);
}

ClassFunction Env::twist(ParahoricKind target, const MultChar& mu, const ClassFunction& f) const {
  const GroupPtr& g = group(target);
  if (f.group() != g) throw DomainError("twist: function lives on the wrong group");
  const Field& F = *field();
  ClassFunction lin;
  switch (target) {
    case ParahoricKind::K: {
      const auto& s = models_.sim.image;
      const GroupPtr& gl1 = models_.gl1;
      lin = ClassFunction::from_element_fn(g, mod_, [&](Id x) { return value(mu, gl1->element(s[x])(0, 0)); });
      break;
    }
    case ParahoricKind::J: {
      const auto& d = models_.j_det.image;
      const GroupPtr& gl1 = models_.gl1;
      lin = ClassFunction::from_element_fn(g, mod_, [&](Id x) { return value(mu, gl1->element(d[x])(0, 0)); });
      break;
    }
    case ParahoricKind::P:
    case ParahoricKind::B: lin = linear_on(g, [&](const Mat& x) { return value(mu, x(2, 2)); }); break;
    case ParahoricKind::Q:
      lin = linear_on(g, [&](const Mat& x) { return value(mu, det(F, submatrix(x, {1, 2}, {1, 2}))); });
      break;
  }
  return f * lin;
}

ClassFunction Env::swapped(const ClassFunction& f) const {
  if (f.group() != models_.j0) throw DomainError("swap acts on the paramodular model only");
  return ClassFunction::from_element_fn(models_.j0, mod_, [&](Id x) { return f.at(models_.swap[x]); });
}

const ClassFunction& Env::gelfand_graev(ParahoricKind k) const {
  if (k == ParahoricKind::K) return gg_k_;
  if (k == ParahoricKind::J) return gg_j_;
  throw DomainError("Gelfand-Graev character defined for K and J only");
}

std::int64_t Env::whittaker(const ClassFunction& chi) const {
  if (chi.group() == models_.gsp4) return whittaker_multiplicity(gg_k_, chi);
  if (chi.group() == models_.j0) return whittaker_multiplicity(gg_j_, chi);
  if (chi.group() == models_.gl2) return whittaker_multiplicity(gg_gl2_, chi);
  throw DomainError("no generic character on " + chi.group()->name());
}

const ParabolicDatum& Env::datum(ParahoricKind levi) const {
  switch (levi) {
    case ParahoricKind::B: return models_.borel;
    case ParahoricKind::P: return models_.siegel;
    case ParahoricKind::Q: return models_.klingen;
    default: throw DomainError("no parabolic of GSp(4) with Levi " + to_string(levi));
  }
}

}  // namespace phr
