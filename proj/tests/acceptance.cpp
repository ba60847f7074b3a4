// Acceptance run: one PASS/FAIL line per criterion.  All comparisons are
// exact; the time limits are the stated budgets.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

#include "phr/error.hpp"
#include "phr/verify.hpp"

using namespace phr;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream msg;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      msg << " [failed: " << what << "]";
    }
  }
};

using Pat = std::vector<std::pair<std::int64_t, std::int64_t>>;

Pat pattern(const CharacterTable& t, const ClassFunction& f) {
  auto mult = t.decompose_character(f);
  Pat out;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) out.emplace_back(t.degrees[i], mult[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<long> support(const CharacterTable& t, const ClassFunction& f) {
  auto mult = t.decompose_character(f);
  std::set<long> s;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) s.insert(static_cast<long>(i));
  return s;
}

std::size_t count_where(const Report& r, const std::function<bool(const CheckRecord&)>& pred) {
  return static_cast<std::size_t>(std::count_if(r.records.begin(), r.records.end(), pred));
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.records)
    if (c.status == Status::Fail)
      return c.check + " " + c.row + " [" + c.params + "] " + c.parahoric + ": expected " + c.expected +
             ", computed " + c.computed;
  return "";
}

// Shared state between criteria.
struct Context {
  fs::path cache;
  EnvPtr env3, env2;
};

Outcome c1(Context& ctx) {
  Outcome o;
  const auto t0 = Clock::now();
  ctx.env3 = Env::build(3);
  const double t = seconds(t0);
  const auto& M = ctx.env3->models();
  o.msg << "|GSp(4,3)| = " << M.gsp4->order() << ", |GL(2,3)| = " << M.gl2->order() << ", |(GL(2,3)^2)^0| = "
        << M.j0->order() << ", Borel index " << M.borel.index() << ", built in " << std::fixed << std::setprecision(2)
        << t << " s";
  o.require(M.gsp4->order() == 103680, "order of GSp(4,3)");
  o.require(M.gl2->order() == 48, "order of GL(2,3)");
  o.require(M.j0->order() == 1152, "order of the paramodular Levi");
  o.require(M.borel.index() == 160, "Borel index");
  o.require(t < 60, "build time");
  return o;
}

Outcome c2(Context& ctx) {
  Outcome o;
  const Env& E = *ctx.env3;
  const auto& M = E.models();
  auto check = [&](const std::string& label, const CharacterTable& t) {
    TableSummary s = summarize(t);
    const bool ok = s.orthogonal && s.sum_sq == static_cast<std::int64_t>(t.group->order()) &&
                    s.classes == t.group->classes().count() && s.degrees.size() == s.classes;
    o.require(ok, label);
    return ok;
  };

  const auto t0 = Clock::now();
  const CharacterTable& K = E.table(ParahoricKind::K);
  const double tk = seconds(t0);
  check("GSp(4,3)", K);
  o.require(tk < 300, "GSp(4,3) table time");
  check("GL(2,3)", E.gl2_table());
  check("(GL(2,3)^2)^0", E.table(ParahoricKind::J));
  check("GL(1)^3", E.table(ParahoricKind::B));
  check("GL(2) x GL(1)", E.table(ParahoricKind::P));
  check("GL(1) x GSp(2)", E.table(ParahoricKind::Q));
  check("GL(1)", dixon_table(M.gl1, E.mod()));
  check("GL(1)^2", dixon_table(M.gl1sq, E.mod()));

  ctx.env2 = Env::build(2);
  const auto& M2 = ctx.env2->models();
  auto sp4 = subgroup(M2.gsp4, [&](const Mat& x) { return similitude(*M2.field, x) == Elem{1}; }, "Sp4").group;
  const CharacterTable sp = dixon_table(sp4, ctx.env2->mod());
  check("Sp(4,2)", sp);
  o.require(sp4->order() == 720, "order of Sp(4,2)");

  store_table(E, ParahoricKind::K, cache_path(ctx.cache.string(), 3, ParahoricKind::K));
  store_table(E, ParahoricKind::J, cache_path(ctx.cache.string(), 3, ParahoricKind::J));

  o.msg << "GSp(4,3) " << K.size() << " classes in " << std::fixed << std::setprecision(2) << tk
        << " s; Sp(4,2) " << sp.size() << " classes, sum of squares " << summarize(sp).sum_sq
        << "; GL(2,3), (GL(2,3)^2)^0 and five Levi/abelian models orthogonal with sum of squares = |G|";
  return o;
}

Report campaign(const Context& ctx, std::vector<ParahoricKind> ks, unsigned q, bool spherical = false) {
  CampaignConfig c;
  c.qs = {q};
  c.parahorics = std::move(ks);
  c.cache_dir = ctx.cache.string();
  c.spherical = spherical;
  c.observations = false;
  c.timing = false;
  return run_campaign(c);
}

Outcome c3(Context& ctx) {
  Outcome o;
  const auto t0 = Clock::now();
  Report r = campaign(ctx, {ParahoricKind::K}, 3);
  const double t = seconds(t0);
  o.require(r.passed(), "campaign: " + first_failure(r));

  std::size_t instantiable_rows = 0;
  for (const auto& row : rows()) {
    if (!instantiable(row, 3)) continue;
    ++instantiable_rows;
    for (const char* check : {"degree", "containment", "central"}) {
      const auto n = count_where(r, [&](const CheckRecord& c) {
        return c.row == row.id && c.check == check && c.status == Status::Pass;
      });
      o.require(n == instances(row, 3).size(), row.id + " " + check);
    }
  }
  const std::map<std::string, std::string> examples = {{"I", "160"},  {"IIa", "120"}, {"IVa", "81"}, {"Va-t", "90"},
                                                       {"VIa", "105"}, {"VII", "80"},  {"XIa", "60"}};
  for (const auto& [id, want] : examples) {
    const auto n = count_where(r, [&](const CheckRecord& c) {
      return c.row == id && c.check == "degree" && c.computed == want;
    });
    o.require(n > 0, id + " degree " + want);
  }
  o.require(t < 600, "campaign time");
  o.msg << instantiable_rows << " rows, " << r.records.size() << " records: pass " << r.count(Status::Pass)
        << ", fail " << r.count(Status::Fail) << ", skipped-degenerate " << r.count(Status::Skipped)
        << "; I 160, IIa 120, IVa 81, Va(xi_t) 90, VIa 105, VII 80, XIa 60; warm cache " << std::fixed
        << std::setprecision(2) << t << " s";
  return o;
}

Outcome c4(Context& ctx) {
  Outcome o;
  Report r = campaign(ctx, {ParahoricKind::J}, 3);
  o.require(r.passed(), "campaign: " + first_failure(r));
  for (const auto& row : rows()) {
    if (!instantiable(row, 3)) continue;
    const auto n = instances(row, 3).size();
    const auto swaps = count_where(r, [&](const CheckRecord& c) {
      return c.row == row.id && c.check == "swap" && c.status == Status::Pass;
    });
    o.require(swaps == n, row.id + " swap");
  }
  for (const char* id : {"X", "XIa", "XIb"}) {
    const auto n = count_where(r, [&](const CheckRecord& c) {
      return c.row == id && c.check == "zero" && c.status == Status::Pass;
    });
    o.require(n == instances(row(id), 3).size(), std::string(id) + " restricts to 0");
  }
  // Halves of [1 x xi, 1 x xi] have degree (q+1)^2/2 = 8; every split is equidimensional with one generic half.
  const auto all_splits = count_where(r, [](const CheckRecord& c) { return c.check == "split"; });
  const auto ps_splits = count_where(r, [](const CheckRecord& c) {
    return c.check == "split" && c.expected.find("[1 x ") != std::string::npos && c.expected.find(", 1 x ") != std::string::npos;
  });
  const auto splits = count_where(r, [](const CheckRecord& c) {
    return c.check == "split" && c.status == Status::Pass && c.expected.find("[1 x ") != std::string::npos &&
           c.expected.find(", 1 x ") != std::string::npos &&
           c.computed.rfind("8 + 8, Whittaker multiplicities 1, 0", 0) == 0;
  });
  const auto one_generic = count_where(r, [](const CheckRecord& c) {
    return c.check == "split" && c.status == Status::Pass && c.computed.find("multiplicities 1, 0") != std::string::npos;
  });
  const auto induced = count_where(r, [](const CheckRecord& c) { return c.check == "induced" && c.status == Status::Pass; });
  o.require(ps_splits > 0 && splits == ps_splits, "[1 x xi, 1 x xi] splits 8 + 8");
  o.require(one_generic == all_splits, "every split has one generic half");

  // Model identities for every induced parent in the tables.
  Verifier V(*ctx.env3);
  std::size_t models = 0;
  std::set<std::string> seen;
  for (const auto& row : rows()) {
    if (!instantiable(row, 3)) continue;
    for (const auto& p : instances(row, 3)) {
      const std::string key = row.parent.to_string() + "|" + p.to_string({"mu0", "mu1", "mu2", "Lambda"}) +
                              (p.tame ? "|t" : "");
      if (!seen.insert(key).second) continue;
      ClassFunction model = V.paramodular_model(row.parent, p);
      ClassFunction pairs = V.resolver().sum(paramodular_restriction(row.parent), ParahoricKind::J, p);
      o.require(model == pairs, "model of " + row.parent.to_string());
      ++models;
    }
  }
  o.msg << r.records.size() << " records, fail " << r.count(Status::Fail) << "; " << induced
        << " induced-row identities, " << models << " parent model identities, " << all_splits
        << " splits into equidimensional halves with one generic, " << splits << " of them [1 x xi, 1 x xi] = 8 + 8; X, XIa, XIb restrict to 0; swap symmetric";
  return o;
}

Outcome c5(Context& ctx) {
  Outcome o;
  Report r = campaign(ctx, {ParahoricKind::B, ParahoricKind::P, ParahoricKind::Q}, 3);
  o.require(r.passed(), "campaign: " + first_failure(r));
  for (const auto& row : rows()) {
    if (!instantiable(row, 3)) continue;
    for (const char* k : {"B", "P", "Q"}) {
      const auto n = count_where(r, [&](const CheckRecord& c) {
        return c.row == row.id && c.parahoric == k && c.check == "hc-from-K" && c.status == Status::Pass;
      });
      o.require(n == instances(row, 3).size(), row.id + " " + k);
    }
  }
  const auto hk = count_where(r, [](const CheckRecord& c) { return c.check == "hc-from-K"; });
  const auto hj = count_where(r, [](const CheckRecord& c) { return c.check == "hc-from-J"; });
  o.msg << hk << " Harish-Chandra restrictions of K rows and " << hj
        << " of J rows equal the B, P, Q columns exactly; " << r.records.size() << " records, fail "
        << r.count(Status::Fail);
  return o;
}

Outcome c6(Context& ctx) {
  Outcome o;
  std::vector<const RowSpec*> rs;
  for (const auto& r : rows())
    if (r.spherical) rs.push_back(&r);
  o.require(rs.size() == 17, "17 unramified rows");
  auto run = [&](const Env& E, unsigned q) {
    Verifier V(E);
    std::vector<const RowSpec*> sel;
    for (const auto* r : rs)
      if (instantiable(*r, q)) sel.push_back(r);
    auto recs = V.check_spherical(sel, all_parahorics());
    std::size_t numeric = 0;
    for (const auto& c : recs) {
      o.require(c.status == Status::Pass, "q=" + std::to_string(q) + " " + c.row + " " + c.parahoric);
      if (c.check == "spherical") ++numeric;
    }
    return std::make_pair(sel.size(), numeric);
  };
  auto [n3, m3] = run(*ctx.env3, 3);
  auto [n2, m2] = run(*ctx.env2, 2);
  o.require(m3 == 85, "85 entries at q=3");
  o.require(m2 == 5 * n2, "all entries at q=2");
  o.msg << n3 << " x 5 = " << m3 << " trivial multiplicities at q=3, " << n2 << " x 5 = " << m2 << " at q=2";
  return o;
}

Outcome c7(Context& ctx) {
  Outcome o;
  const Env& E = *ctx.env3;
  const auto& K = E.table(ParahoricKind::K);
  Resolver R(E);
  const Params p;
  auto one = E.one();
  auto lam = *E.lambda0();
  o.require(pattern(K, E.borel(one, one, one)) == Pat{{1, 1}, {15, 1}, {15, 1}, {24, 2}, {81, 1}}, "1x1⋊1");

  const std::vector<std::string> refs = {"Ione⋊1", "St⋊1", "1⋊Ione", "1⋊St"};
  std::map<std::string, long> theta;
  for (const char* n : {"theta0", "theta1", "theta3", "theta4", "theta5"}) theta[n] = K.index_of(R.named(n, p));
  for (std::size_t i = 0; i < refs.size(); ++i) {
    ClassFunction f = R.reference(refs[i], p);
    auto mult = K.decompose_character(f);
    std::int64_t total = 0;
    for (auto m : mult) total += m;
    o.require(total == 3 && std::all_of(mult.begin(), mult.end(), [](std::int64_t m) { return m <= 1; }),
              refs[i] + " has 3 constituents");
    std::set<long> want;
    for (const auto& [n, idx] : theta)
      if (fingerprint(n).pattern[i]) want.insert(idx);
    o.require(support(K, f) == want, refs[i] + " theta pattern");
  }
  o.require(E.siegel(E.gl2_one(one), one) + E.siegel(E.gl2_st(one), one) == E.borel(one, one, one),
            "Ione⋊1 + St⋊1 = 1x1⋊1");
  o.require(pattern(K, E.siegel(E.gl2_st(lam), one)) == Pat{{30, 1}, {90, 1}}, "lambda0 St⋊1");
  std::size_t cusps = 0;
  for (auto l : lambda_representatives(3, "res1")) {
    auto pi = E.gl2_cusp(E.ext_char(l));
    o.require(pattern(K, E.klingen(one, pi)) == Pat{{20, 1}, {60, 1}}, "1⋊pi");
    o.require(pattern(K, E.siegel(pi, one)) == Pat{{20, 1}, {60, 1}}, "pi⋊1");
    ++cusps;
  }
  o.require(cusps > 0, "a cuspidal pi with trivial central character");
  o.msg << "1x1⋊1 = {1, 15, 15, 24^2, 81}; Ione⋊1, St⋊1, 1⋊Ione, 1⋊St each 3 theta constituents as fingerprinted; "
           "lambda0 St⋊1 = {30, 90}; 1⋊pi = pi⋊1 = {20, 60}";
  return o;
}

Outcome c8(Context& ctx) {
  Outcome o;
  std::size_t pairs = 0, whittaker = 0;
  for (const Env* Ep : {ctx.env2.get(), ctx.env3.get()}) {
    const Env& E = *Ep;
    const auto& M = E.models();
    auto run = [&](const ParabolicDatum& d, const CharacterTable& big) {
      auto small = dixon_table(d.levi, E.mod());
      for (const auto& f : small.irr) {
        auto ind = induce(d, f);
        for (const auto& chi : big.irr) {
          o.require(inner_product(ind, chi) == inner_product(f, hc_restrict(d, chi)), "Frobenius reciprocity");
          ++pairs;
        }
      }
    };
    run(M.borel, E.table(ParahoricKind::K));
    run(M.siegel, E.table(ParahoricKind::K));
    run(M.klingen, E.table(ParahoricKind::K));
    run(M.j_klingen, E.table(ParahoricKind::J));
    run(M.j_borel, E.table(ParahoricKind::J));
    run(M.gl2_borel, E.gl2_table());

    for (const CharacterTable* t : {&E.table(ParahoricKind::K), &E.table(ParahoricKind::J), &E.gl2_table()}) {
      for (const auto& chi : t->irr) {
        const auto w = E.whittaker(chi);
        o.require(w == 0 || w == 1, "Whittaker multiplicity at most one");
        ++whittaker;
      }
    }
  }

  // GL(2) restriction table.
  const Env& E = *ctx.env3;
  Resolver R(E);
  const auto& bd = E.models().gl2_borel;
  const auto& T = E.gl2_table();
  std::size_t rows_checked = 0;
  for (std::int64_t a = 0; a < 2; ++a)
    for (std::int64_t b = 0; b < 2; ++b) {
      Params p;
      p.mu1 = a;
      p.mu2 = b;
      for (const auto& g : gl2_rows()) {
        if (!g.k || g.cuspidal_k) continue;
        if (g.kind != "principal" && a != b) continue;
        ClassFunction f = R.gl2(*g.k, p);
        ClassFunction expect(bd.levi, E.mod());
        for (const auto& [x, y] : g.b) expect += E.gl1sq(R.character(x, p), R.character(y, p));
        o.require(hc_restrict(bd, f) == expect, g.kind + " Iwahori column");
        if (g.kind != "principal") o.require(T.index_of(f) >= 0, g.kind + " irreducible");
        ++rows_checked;
      }
      if (a == b) {
        auto mu = E.chi(a);
        o.require(E.gl2_ps(mu, mu) == E.gl2_one(mu) + E.gl2_st(mu), "mu x mu = mu Ione + mu St");
      }
    }
  for (auto l : lambda_representatives(3, "")) {
    ClassFunction pi = E.gl2_cusp(E.ext_char(l));
    o.require(inner_product(pi, pi) == 1 && T.index_of(pi) >= 0, "depth-zero cuspidal irreducible");
    o.require(hc_restrict(bd, pi).is_zero(), "cuspidal Iwahori column 0");
    ++rows_checked;
  }
  o.msg << pairs << " reciprocity pairs at q = 2, 3; " << whittaker << " Whittaker multiplicities in {0, 1}; "
        << rows_checked << " GL(2) table instances";
  return o;
}

Outcome c9(Context& ctx) {
  Outcome o;
  const auto t0 = Clock::now();
  CampaignConfig c;
  c.qs = {2};
  c.timing = false;
  Report r = run_campaign(c);
  const double t = seconds(t0);
  o.require(r.passed(), "campaign: " + first_failure(r));
  std::size_t rows2 = 0;
  for (const auto& row : rows()) rows2 += instantiable(row, 2);
  o.require(rows2 > 0, "instantiable rows");
  o.require(t < 30, "campaign time");
  o.msg << rows2 << " rows instantiable at q=2, " << r.records.size() << " records, fail " << r.count(Status::Fail)
        << ", in " << std::fixed << std::setprecision(2) << t << " s";
  (void)ctx;
  return o;
}

}  // namespace

int main() {
  Context ctx;
  ctx.cache = fs::temp_directory_path() / ("phr-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(ctx.cache);

  struct Criterion {
    int n;
    const char* name;
    Outcome (*run)(Context&);
  };
  const std::vector<Criterion> cs = {
      {1, "group constructions at q=3", c1},
      {2, "character tables", c2},
      {3, "hyperspecial table at q=3", c3},
      {4, "paramodular table at q=3", c4},
      {5, "Iwahori, Siegel and Klingen tables at q=3", c5},
      {6, "spherical dimensions", c6},
      {7, "decompositions of induced representations at q=3", c7},
      {8, "reciprocity, Whittaker multiplicities, GL(2) table", c8},
      {9, "campaign at q=2", c9},
  };
  bool all = true;
  for (const auto& c : cs) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o.ok = false;
      o.msg << "exception: " << e.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.n << " " << c.name << ": " << o.msg.str() << " ("
              << std::fixed << std::setprecision(1) << seconds(t0) << " s)" << std::endl;
  }
  std::error_code ec;
  fs::remove_all(ctx.cache, ec);
  return all ? 0 : 1;
}
