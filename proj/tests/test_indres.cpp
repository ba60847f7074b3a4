#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "phr/error.hpp"
#include "phr/indres.hpp"

using namespace phr;

namespace {

const Env& env3() {
  static EnvPtr e = Env::build(3);
  return *e;
}

const Env& env2() {
  static EnvPtr e = Env::build(2);
  return *e;
}

// (1/|H|) sum_{x in G} f(x g x^-1), straight from the definition.
ClassFunction brute_induce(const Subgroup& h, const Modulus& m, const std::vector<std::uint32_t>& per) {
  const Group& G = *h.parent;
  std::vector<long> where(G.order(), -1);
  for (Id i = 0; i < h.to_parent.size(); ++i) where[h.to_parent[i]] = i;
  const auto& cc = G.classes();
  std::vector<std::uint32_t> vals(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    std::uint32_t s = 0;
    for (Id x = 0; x < G.order(); ++x) {
      long w = where[G.mul(G.mul(x, cc.reps[c]), G.inv(x))];
      if (w >= 0) s = m.add(s, per[w]);
    }
    vals[c] = m.mul(s, m.inv(m.from_int(static_cast<std::int64_t>(h.group->order()))));
  }
  return ClassFunction::from_values(h.parent, m, vals);
}

// (1/|U|) sum_{u in U} F(s(l) u) for one preimage s(l) of each Levi class rep.
ClassFunction brute_hc(const ParabolicDatum& d, const ClassFunction& F) {
  const Modulus& m = F.modulus();
  const Group& P = *d.parabolic.group;
  const auto& lc = d.levi->classes();
  std::vector<Id> section(lc.count(), kNoId);
  for (Id i = 0; i < P.order(); ++i) {
    Id l = d.projection.image[i];
    for (std::size_t c = 0; c < lc.count(); ++c)
      if (lc.reps[c] == l && section[c] == kNoId) section[c] = i;
  }
  std::vector<Id> u_in_p;
  for (Id u : d.radical.to_parent) u_in_p.push_back(d.parabolic.group->find(d.radical.parent->element(u)));
  std::vector<std::uint32_t> vals(lc.count());
  for (std::size_t c = 0; c < lc.count(); ++c) {
    REQUIRE(section[c] != kNoId);
    std::uint32_t s = 0;
    for (Id u : u_in_p) s = m.add(s, F.at(d.parabolic.to_parent[P.mul(section[c], u)]));
    vals[c] = m.mul(s, m.inv(m.from_int(static_cast<std::int64_t>(u_in_p.size()))));
  }
  return ClassFunction::from_values(d.levi, m, vals);
}

// Sorted (degree, multiplicity) pairs of the constituents.
std::vector<std::pair<std::int64_t, std::int64_t>> pattern(const CharacterTable& t, const ClassFunction& f) {
  auto mult = t.decompose_character(f);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) out.emplace_back(t.degrees[i], mult[i]);
  std::sort(out.begin(), out.end());
  return out;
}

using Pat = std::vector<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST_CASE("induce agrees with the definition") {
  const Env& E = env3();
  const auto& M = E.models();
  auto check = [&](const ParabolicDatum& d, const ClassFunction& f) {
    std::vector<std::uint32_t> per(d.parabolic.group->order());
    for (Id i = 0; i < per.size(); ++i) per[i] = f.at(d.projection.image[i]);
    CHECK(induce(d, f) == brute_induce(d.parabolic, E.mod(), per));
    CHECK(induce(d, f).degree() == static_cast<std::int64_t>(d.index()) * f.degree());
  };
  auto lam = *E.lambda0();
  check(M.gl2_borel, E.gl1sq(lam, E.one()));
  check(M.j_klingen, E.levi_q(lam, E.gl2_st(E.one())));
  check(M.j_borel, E.levi_b(lam, E.one(), lam));
  check(M.p_borel, E.levi_b(E.one(), lam, E.one()));
}

TEST_CASE("hc_restrict agrees with the definition") {
  const Env& E = env3();
  const auto& M = E.models();
  auto f = E.siegel(E.gl2_st(*E.lambda0()), E.one());
  CHECK(hc_restrict(M.siegel, f) == brute_hc(M.siegel, f));
  CHECK(hc_restrict(M.klingen, f) == brute_hc(M.klingen, f));
  auto g = E.pair(E.gl2_ps(*E.lambda0(), E.one()), E.gl2_st(E.one()));
  CHECK(hc_restrict(M.j_klingen, g) == brute_hc(M.j_klingen, g));
  auto triv = ClassFunction::trivial(M.gsp4, E.mod());
  CHECK(hc_restrict(M.borel, triv) == ClassFunction::trivial(M.levi_b, E.mod()));
  CHECK(hc_restrict(M.borel, E.borel(E.one(), E.one(), E.one())).degree() == 8);
}

TEST_CASE("Frobenius reciprocity, all irreducibles") {
  for (const Env* Ep : {&env2(), &env3()}) {
    const Env& E = *Ep;
    const auto& M = E.models();
    auto run = [&](const ParabolicDatum& d, const CharacterTable& big) {
      auto small = dixon_table(d.levi, E.mod());
      for (const auto& f : small.irr) {
        auto ind = induce(d, f);
        for (const auto& chi : big.irr) REQUIRE(inner_product(ind, chi) == inner_product(f, hc_restrict(d, chi)));
      }
    };
    run(M.borel, E.table(ParahoricKind::K));
    run(M.siegel, E.table(ParahoricKind::K));
    run(M.klingen, E.table(ParahoricKind::K));
    run(M.j_klingen, E.table(ParahoricKind::J));
    run(M.j_borel, E.table(ParahoricKind::J));
    run(M.gl2_borel, E.gl2_table());
  }
}

TEST_CASE("hc_restrict is transitive") {
  const Env& E = env3();
  const auto& M = E.models();
  for (const auto& chi : E.table(ParahoricKind::K).irr) {
    auto direct = hc_restrict(M.borel, chi);
    CHECK(hc_restrict(M.p_borel, hc_restrict(M.siegel, chi)) == direct);
    CHECK(hc_restrict(M.q_borel, hc_restrict(M.klingen, chi)) == direct);
  }
}

TEST_CASE("induction in stages") {
  const Env& E = env3();
  auto one = E.one();
  auto lam = *E.lambda0();
  for (const auto& mu1 : {one, lam})
    for (const auto& mu2 : {one, lam})
      for (const auto& mu0 : {one, lam}) {
        auto b = E.borel(mu1, mu2, mu0);
        CHECK(b.degree() == 160);
        CHECK(E.siegel(E.gl2_ps(mu1, mu2), mu0) == b);
        CHECK(E.klingen(mu1, E.gl2_ps(mu2 * mu0, mu0)) == b);
      }
}

TEST_CASE("GL(2) restriction table") {
  const Env& E = env3();
  const auto& M = E.models();
  const auto& T = E.gl2_table();
  CHECK(T.size() == 8);
  auto one = E.one();
  auto lam = *E.lambda0();
  // 1 x 1 = Ione + St.
  CHECK(pattern(T, E.gl2_ps(one, one)) == Pat{{1, 1}, {3, 1}});
  CHECK(E.gl2_ps(one, one) == E.gl2_one(one) + E.gl2_st(one));
  CHECK(E.gl2_ps(lam, one) == E.gl2_ps(one, lam));
  for (const auto& mu : {one, lam}) {
    CHECK(hc_restrict(M.gl2_borel, E.gl2_one(mu)) == E.gl1sq(mu, mu));
    CHECK(hc_restrict(M.gl2_borel, E.gl2_st(mu)) == E.gl1sq(mu, mu));
    CHECK(T.index_of(E.gl2_st(mu)) >= 0);
  }
  CHECK(hc_restrict(M.gl2_borel, E.gl2_ps(lam, one)) == E.gl1sq(lam, one) + E.gl1sq(one, lam));
  CHECK(T.index_of(E.gl2_ps(lam, one)) >= 0);
  // Cuspidal characters: Frobenius orbits {1,3}, {2,6}, {5,7} of general-position Lambda.
  std::vector<long> seen;
  for (int l : {1, 2, 5}) {
    auto lamx = E.ext_char(l);
    auto pi = E.gl2_cusp(lamx);
    CHECK(pi.degree() == 2);
    CHECK(inner_product(pi, pi) == 1);
    CHECK(pi == E.gl2_cusp(lamx.frobenius()));
    CHECK(hc_restrict(M.gl2_borel, pi).is_zero());
    CHECK(E.whittaker(pi) == 1);
    seen.push_back(T.index_of(pi));
    // Central character Lambda restricted to F_q^x.
    for (auto [cls, w] : central_character(pi)) {
      Mat z = M.gl2->element(M.gl2->classes().reps[cls]);
      CHECK(w == E.value(E.restrict(lamx), z(0, 0)));
    }
    CHECK(pi.dual() == E.gl2_cusp(lamx.inverse()));
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.front() >= 0);
  CHECK_THROWS_AS(E.gl2_cusp(E.ext_char(4)), DomainError);
  CHECK_THROWS_AS(E.gl2_cusp(lam), DomainError);
}

TEST_CASE("principal series of GSp(4,3)") {
  const Env& E = env3();
  const auto& K = E.table(ParahoricKind::K);
  auto one = E.one();
  auto lam = *E.lambda0();
  CHECK(pattern(K, E.borel(one, one, one)) == Pat{{1, 1}, {15, 1}, {15, 1}, {24, 2}, {81, 1}});
  CHECK(pattern(K, E.klingen(one, E.gl2_st(one))) == Pat{{15, 1}, {24, 1}, {81, 1}});
  CHECK(pattern(K, E.siegel(E.gl2_st(one), one)) == Pat{{15, 1}, {24, 1}, {81, 1}});
  CHECK(pattern(K, E.siegel(E.gl2_st(lam), one)) == Pat{{30, 1}, {90, 1}});
  // 1 ⋊ pi and pi ⋊ 1 for Lambda| = 1.
  auto pi = E.gl2_cusp(E.ext_char(2));
  CHECK(pattern(K, E.klingen(one, pi)) == Pat{{20, 1}, {60, 1}});
  CHECK(pattern(K, E.siegel(pi, one)) == Pat{{20, 1}, {60, 1}});
  CHECK(E.siegel(E.gl2_cusp(E.ext_char(1)), one).degree() == 80);
}

TEST_CASE("Whittaker multiplicities are at most one") {
  for (const Env* Ep : {&env2(), &env3()}) {
    const Env& E = *Ep;
    for (auto k : {ParahoricKind::K, ParahoricKind::J}) {
      std::int64_t generic = 0;
      for (const auto& chi : E.table(k).irr) {
        auto w = E.whittaker(chi);
        CHECK(w >= 0);
        CHECK(w <= 1);
        generic += w;
      }
      CHECK(generic > 0);
    }
    for (const auto& chi : E.gl2_table().irr) CHECK(E.whittaker(chi) <= 1);
  }
}

TEST_CASE("paramodular pairs") {
  const Env& E = env3();
  const auto& M = E.models();
  auto one = E.one();
  auto lam = *E.lambda0();
  const auto& J = E.table(ParahoricKind::J);
  CHECK(E.pair(E.gl2_one(one), E.gl2_one(one)) == ClassFunction::trivial(M.j0, E.mod()));
  auto ps11 = E.gl2_ps(one, one);
  // [1,1] + [1,St] + [St,1] + [St,St].
  CHECK(pattern(J, E.pair(ps11, ps11)) == Pat{{1, 1}, {3, 1}, {3, 1}, {9, 1}});
  auto half = E.pair(E.gl2_ps(one, lam), E.gl2_ps(one, lam));
  CHECK(half.degree() == 16);
  CHECK(E.splits(half));
  auto s = E.split(half);
  CHECK(s.generic.degree() == 8);
  CHECK(s.nongeneric.degree() == 8);
  CHECK(E.whittaker(s.generic) == 1);
  CHECK(E.whittaker(s.nongeneric) == 0);
  CHECK(s.generic + s.nongeneric == half);
  auto irr = E.pair(E.gl2_st(one), E.gl2_ps(one, lam));
  CHECK_FALSE(E.splits(irr));
  CHECK_THROWS_AS(E.split(irr), DomainError);
  auto pi = E.gl2_cusp(E.ext_char(2));
  CHECK(E.splits(E.pair(pi, E.gl2_ps(one, lam))));
  CHECK_FALSE(E.splits(E.pair(E.gl2_cusp(E.ext_char(1)), E.gl2_ps(one, lam))));

  // Twist and swap.
  for (const auto& a : {E.gl2_st(one), E.gl2_ps(one, lam), pi})
    for (const auto& b : {E.gl2_one(lam), pi}) {
      auto p = E.pair(a, b);
      CHECK(p.degree() == a.degree() * b.degree());
      CHECK(E.twist(ParahoricKind::J, lam, p) == E.pair(a * E.gl2_one(lam), b));
      CHECK(E.swapped(p) == E.pair(b, a));
    }
}

TEST_CASE("paramodular models of induced representations") {
  const Env& E = env3();
  auto one = E.one();
  auto lam = *E.lambda0();
  auto pi = E.gl2_cusp(E.ext_char(1));
  for (const auto& mu1 : {one, lam}) {
    for (const auto& sigma : {E.gl2_st(one), E.gl2_one(lam), E.gl2_ps(one, lam), pi})
      CHECK(E.klingen_pair_model(mu1, sigma) == E.pair(E.gl2_ps(mu1, one), sigma));
    for (const auto& mu2 : {one, lam})
      CHECK(E.siegel_pair_model(mu1, mu2) == E.pair(E.gl2_ps(one, mu1), E.gl2_ps(one, mu2)));
  }
}

TEST_CASE("A, B, C sums and twists") {
  const Env& E = env3();
  const auto& M = E.models();
  auto one = E.one();
  auto lam = *E.lambda0();
  CHECK(E.abc('A', one, one, one) == ClassFunction::trivial(M.levi_b, E.mod()).scaled(4));
  for (const auto& mu1 : {one, lam})
    for (const auto& mu2 : {one, lam}) {
      CHECK(E.abc('A', mu1, mu2, lam).degree() == 4);
      CHECK(E.abc('B', mu1, mu2, one).degree() == 8);
      CHECK(E.abc('C', mu1, mu2, one).degree() == 8);
      // The sums are the Iwahori, Klingen and Siegel restrictions of the Borel series.
      auto b = E.borel(mu1, mu2, one);
      CHECK(hc_restrict(M.borel, b) == E.abc('A', mu1, mu2, one) + E.abc('A', mu2, mu1, one));
    }
  CHECK_THROWS_AS(E.abc('D', one, one, one), DomainError);

  // Twisting permutes irreducibles and commutes with restriction.
  for (auto k : {ParahoricKind::K, ParahoricKind::J}) {
    const auto& T = E.table(k);
    std::vector<long> img;
    for (const auto& chi : T.irr) img.push_back(T.index_of(E.twist(k, lam, chi)));
    std::sort(img.begin(), img.end());
    for (std::size_t i = 0; i < img.size(); ++i) CHECK(img[i] == static_cast<long>(i));
  }
  for (const auto& chi : E.table(ParahoricKind::K).irr) {
    CHECK(hc_restrict(M.siegel, E.twist(ParahoricKind::K, lam, chi)) ==
          E.twist(ParahoricKind::P, lam, hc_restrict(M.siegel, chi)));
    CHECK(hc_restrict(M.klingen, E.twist(ParahoricKind::K, lam, chi)) ==
          E.twist(ParahoricKind::Q, lam, hc_restrict(M.klingen, chi)));
  }
  CHECK(E.siegel(E.gl2_st(one), lam) == E.twist(ParahoricKind::K, lam, E.siegel(E.gl2_st(one), one)));
}

TEST_CASE("environment rejections") {
  CHECK_THROWS_AS(Env::build(4), DomainError);
  const Env& E = env3();
  CHECK_THROWS_AS(E.gelfand_graev(ParahoricKind::B), DomainError);
  CHECK_THROWS_AS(E.datum(ParahoricKind::J), DomainError);
  CHECK_THROWS_AS(E.swapped(E.gl2_st(E.one())), DomainError);
  CHECK_THROWS_AS(induce(E.models().siegel, E.gl2_st(E.one())), DomainError);
  CHECK_FALSE(env2().lambda0().has_value());
}
