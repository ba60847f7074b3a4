#include "phr/gsp4.hpp"

#include <algorithm>

#include "phr/error.hpp"

namespace phr {

namespace {

std::vector<Elem> prime_basis(const Field& f) {
  std::vector<Elem> b{1};
  if (f.degree() == 2) b.push_back(static_cast<Elem>(f.characteristic()));
  return b;
}

// Unitriangular 2x2 generators embedded as blocks by `wrap`.
std::vector<Mat> unit2_gens(const Field& f, bool upper, const std::function<Mat(const Mat&)>& wrap) {
  std::vector<Mat> out;
  for (Elem t : prime_basis(f)) out.push_back(wrap(upper ? Mat(2, {1, t, 0, 1}) : Mat(2, {1, 0, t, 1})));
  return out;
}

}  // namespace

std::string to_string(ParahoricKind k) {
  switch (k) {
    case ParahoricKind::B: return "B";
    case ParahoricKind::P: return "P";
    case ParahoricKind::Q: return "Q";
    case ParahoricKind::K: return "K";
    case ParahoricKind::J: return "J";
  }
  return "?";
}

ParahoricKind parse_parahoric(const std::string& s) {
  for (auto k : all_parahorics())
    if (to_string(k) == s) return k;
  throw DomainError("unknown parahoric '" + s + "'");
}

const std::vector<ParahoricKind>& all_parahorics() {
  static const std::vector<ParahoricKind> v{ParahoricKind::K, ParahoricKind::J, ParahoricKind::P, ParahoricKind::Q,
                                            ParahoricKind::B};
  return v;
}

Mat symplectic_form() { return Mat(4, {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}); }

std::optional<Elem> similitude(const Field& f, const Mat& g) {
  if (g.n != 4) return std::nullopt;
  Mat j = symplectic_form();
  j(2, 0) = f.neg(1);
  j(3, 1) = f.neg(1);
  Mat lhs = mul(f, mul(f, g, j), transpose(g));
  Elem s = lhs(0, 2);
  if (s == 0) return std::nullopt;
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned c = 0; c < 4; ++c)
      if (lhs(r, c) != f.mul(s, j(r, c))) return std::nullopt;
  return s;
}

std::size_t gsp4_order(unsigned q) {
  std::size_t q2 = std::size_t(q) * q, q4 = q2 * q2;
  return q4 * (q2 - 1) * (q4 - 1) * (q - 1);
}

GroupPtr build_gsp4(const FieldPtr& f, std::size_t cap) {
  const Field& F = *f;
  const unsigned q = f->order();
  if (q > 16) throw DomainError("q too large for the matrix encoding");
  const Elem g = f->generator();
  const Elem gi = f->inv(g);
  std::vector<Mat> gens;
  if (q > 2) {
    gens.push_back(Mat::diag({g, 1, gi, 1}));
    gens.push_back(Mat::diag({1, g, 1, gi}));
    gens.push_back(Mat::diag({1, 1, g, g}));
  }
  Mat s1(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  Mat s2 = Mat::identity(4);
  s2(1, 1) = 0;
  s2(3, 3) = 0;
  s2(1, 3) = 1;
  s2(3, 1) = F.neg(1);
  gens.push_back(s1);
  gens.push_back(s2);
  // Root elements for every t in a basis of F over its prime field.
  for (Elem t : prime_basis(F)) {
    Mat x = Mat::identity(4);
    x(0, 1) = t;
    x(3, 2) = F.neg(t);
    gens.push_back(x);
    Mat y = Mat::identity(4);
    y(1, 3) = t;
    gens.push_back(y);
  }
  for (const Mat& m : gens)
    if (!similitude(F, m)) throw ComputationError("GSp(4) generator fails the symplectic equation");
  auto grp = Group::generate(f, 4, gens, "GSp4(" + std::to_string(q) + ")", gsp4_order(q), cap);
  return grp;
}

ParabolicDatum build_parabolic(const GroupPtr& ambient, const std::function<bool(const Mat&)>& pred,
                               const std::vector<Mat>& radical_gens, const GroupPtr& levi,
                               const std::function<Mat(const Mat&)>& levi_map, std::string name) {
  ParabolicDatum d;
  d.name = name;
  d.ambient = ambient;
  d.parabolic = subgroup(ambient, pred, name);
  d.radical = subgroup_generated(ambient, radical_gens, "U_" + name);
  d.levi = levi;
  d.projection = Hom::build(d.parabolic.group, levi, levi_map);
  if (d.projection.image_size() != levi->order()) throw ComputationError("Levi map of " + name + " is not onto");
  auto ker = d.projection.kernel();
  if (ker.size() != d.radical.group->order())
    throw ComputationError("radical of " + name + " differs from the kernel of the Levi map");
  for (Id x : ker)
    if (d.radical.group->find_key(d.parabolic.group->key(x)) == kNoId)
      throw ComputationError("radical of " + name + " differs from the kernel of the Levi map");
  if (d.parabolic.group->order() != d.radical.group->order() * levi->order())
    throw ComputationError("|P| != |U| |L| for " + name);
  return d;
}

std::vector<Id> paramodular_swap(const GroupPtr& j0) {
  std::vector<Id> s(j0->order());
  for (Id i = 0; i < j0->order(); ++i) {
    Mat m = j0->element(i);
    Mat a = submatrix(m, {0, 1}, {0, 1});
    Mat b = submatrix(m, {2, 3}, {2, 3});
    s[i] = j0->id_of(block_diag(b, a));
  }
  for (Id i = 0; i < j0->order(); ++i) {
    if (s[s[i]] != i) throw ComputationError("paramodular swap is not an involution");
    for (Id g : j0->generators())
      if (s[j0->mul(i, g)] != j0->mul(s[i], s[g])) throw ComputationError("paramodular swap is not an automorphism");
  }
  return s;
}

const ParabolicDatum& Gsp4Models::parabolic(ParabolicKind k) const {
  switch (k) {
    case ParabolicKind::Borel: return borel;
    case ParabolicKind::Siegel: return siegel;
    case ParabolicKind::Klingen: return klingen;
  }
  throw DomainError("unknown parabolic");
}

GroupPtr Gsp4Models::levi_model(ParahoricKind k) const {
  switch (k) {
    case ParahoricKind::K: return gsp4;
    case ParahoricKind::J: return j0;
    case ParahoricKind::P: return levi_p;
    case ParahoricKind::Q: return levi_q;
    case ParahoricKind::B: return levi_b;
  }
  throw DomainError("unknown parahoric");
}

Gsp4Models build_models(unsigned q, std::size_t cap) {
  unsigned p = q, k = 1;
  if (!is_prime(q)) {
    for (unsigned c = 2; c * c <= q; ++c)
      if (c * c == q && is_prime(c)) p = c, k = 2;
    if (k == 1) throw DomainError("q must be p or p^2");
  }
  if (gsp4_order(q) > cap) throw ResourceError("|GSp(4," + std::to_string(q) + ")| exceeds the element cap");
  Gsp4Models M;
  M.field = Field::build(p, k);
  const FieldPtr& f = M.field;
  const Field& F = *f;
  M.gl1 = build_gl(f, 1);
  M.gl2 = build_gl(f, 2);
  M.gsp4 = build_gsp4(f, cap);
  M.sim = Hom::build(M.gsp4, M.gl1, [&](const Mat& x) {
    auto s = similitude(F, x);
    if (!s) throw ComputationError("element of GSp(4) fails the symplectic equation");
    return Mat::diag({*s});
  });

  M.gl1sq = direct_product(M.gl1, M.gl1, "GL1^2");
  M.levi_b = direct_product(M.gl1sq, M.gl1, "GL1^3");
  M.levi_p = direct_product(M.gl2, M.gl1, "GL2xGL1");
  M.levi_q = direct_product(M.gl1, M.gl2, "GL1xGSp2");
  M.j0 = fiber_product_det(M.gl2, M.gl2, "J0");

  auto simv = [&](const Mat& x) { return *similitude(F, x); };

  std::vector<Mat> ub_gens, up_gens, uq_gens;
  for (Elem t : prime_basis(F)) {
    Mat x12 = Mat::identity(4);
    x12(0, 1) = t;
    x12(3, 2) = F.neg(t);
    Mat x13 = Mat::identity(4);
    x13(0, 2) = t;
    Mat x24 = Mat::identity(4);
    x24(1, 3) = t;
    Mat x14 = Mat::identity(4);
    x14(0, 3) = t;
    x14(1, 2) = t;
    ub_gens.insert(ub_gens.end(), {x12, x13, x24, x14});
    up_gens.insert(up_gens.end(), {x13, x24, x14});
    uq_gens.insert(uq_gens.end(), {x12, x13, x14});
  }

  M.borel = build_parabolic(
      M.gsp4,
      [](const Mat& x) {
        return x(1, 0) == 0 && x(2, 0) == 0 && x(2, 1) == 0 && x(2, 3) == 0 && x(3, 0) == 0 && x(3, 1) == 0;
      },
      ub_gens, M.levi_b, [&](const Mat& x) { return Mat::diag({x(0, 0), x(1, 1), simv(x)}); }, "B");
  M.siegel = build_parabolic(
      M.gsp4, [](const Mat& x) { return x(2, 0) == 0 && x(2, 1) == 0 && x(3, 0) == 0 && x(3, 1) == 0; }, up_gens,
      M.levi_p, [&](const Mat& x) { return block_diag(submatrix(x, {0, 1}, {0, 1}), Mat::diag({simv(x)})); }, "P");
  M.klingen = build_parabolic(
      M.gsp4, [](const Mat& x) { return x(1, 0) == 0 && x(2, 0) == 0 && x(2, 1) == 0 && x(2, 3) == 0 && x(3, 0) == 0; },
      uq_gens, M.levi_q, [&](const Mat& x) { return block_diag(Mat::diag({x(0, 0)}), submatrix(x, {1, 3}, {1, 3})); },
      "Q");

  const Mat I2 = Mat::identity(2);
  const Mat I1 = Mat::identity(1);
  auto left = [&](const Mat& a) { return block_diag(a, I2); };
  auto right = [&](const Mat& b) { return block_diag(I2, b); };
  auto cat = [](std::vector<Mat> a, const std::vector<Mat>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  M.j_klingen = build_parabolic(
      M.j0, [](const Mat& x) { return x(0, 1) == 0; }, unit2_gens(F, false, left), M.levi_q,
      [&](const Mat& x) { return block_diag(Mat::diag({x(0, 0)}), submatrix(x, {2, 3}, {2, 3})); }, "Q_J");
  M.j_borel = build_parabolic(
      M.j0, [](const Mat& x) { return x(0, 1) == 0 && x(3, 2) == 0; },
      cat(unit2_gens(F, false, left), unit2_gens(F, true, right)), M.levi_b,
      [&](const Mat& x) { return Mat::diag({x(0, 0), x(2, 2), det(F, submatrix(x, {0, 1}, {0, 1}))}); }, "B_J");

  M.p_borel = build_parabolic(
      M.levi_p, [](const Mat& x) { return x(1, 0) == 0; }, unit2_gens(F, true, [&](const Mat& a) { return block_diag(a, I1); }), M.levi_b,
      [](const Mat& x) { return Mat::diag({x(0, 0), x(1, 1), x(2, 2)}); }, "B_P");
  M.q_borel = build_parabolic(
      M.levi_q, [](const Mat& x) { return x(2, 1) == 0; }, unit2_gens(F, true, [&](const Mat& b) { return block_diag(I1, b); }), M.levi_b,
      [&](const Mat& x) { return Mat::diag({x(0, 0), x(1, 1), F.mul(x(1, 1), x(2, 2))}); }, "B_Q");
  M.gl2_borel = build_parabolic(
      M.gl2, [](const Mat& x) { return x(1, 0) == 0; }, unit2_gens(F, true, [](const Mat& a) { return a; }), M.gl1sq,
      [](const Mat& x) { return Mat::diag({x(0, 0), x(1, 1)}); }, "B_GL2");

  M.unipotent_b = M.borel.radical;
  M.unipotent_j = subgroup_generated(M.j0, cat(unit2_gens(F, true, left), unit2_gens(F, true, right)), "U_J");
  M.unipotent_gl2 = M.gl2_borel.radical;
  M.swap = paramodular_swap(M.j0);
  M.j_first = Hom::build(M.j0, M.gl2, [](const Mat& x) { return submatrix(x, {0, 1}, {0, 1}); });
  M.j_second = Hom::build(M.j0, M.gl2, [](const Mat& x) { return submatrix(x, {2, 3}, {2, 3}); });
  M.j_det = Hom::build(M.j0, M.gl1, [&](const Mat& x) { return Mat::diag({det(F, submatrix(x, {0, 1}, {0, 1}))}); });
  return M;
}

}  // namespace phr
