#include "phr/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "phr/error.hpp"

namespace phr {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped-degenerate";
    case Status::Observation: return "observation";
  }
  return "?";
}

// ---------------------------------------------------------------- report

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == s; }));
}

bool Report::passed() const { return count(Status::Fail) == 0 && !(config.strict && count(Status::Skipped) > 0); }

std::string Report::to_jsonl() const {
  std::ostringstream os;
  json header;
  header["schema"] = "phr-report/1";
  header["q"] = config.qs;
  json mods = json::array();
  for (const auto& [q, ell] : moduli) mods.push_back({{"q", q}, {"ell", ell}});
  header["moduli"] = mods;
  json ks = json::array();
  for (auto k : config.parahorics) ks.push_back(to_string(k));
  header["parahorics"] = ks;
  header["types"] = config.types ? json(*config.types) : json("all");
  header["strict"] = config.strict;
  os << header.dump() << "\n";
  for (const auto& r : records) {
    json j;
    j["check"] = r.check;
    j["q"] = r.q;
    j["row"] = r.row;
    j["params"] = r.params;
    j["parahoric"] = r.parahoric;
    j["status"] = to_string(r.status);
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (config.timing) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms + 0.5);
    os << j.dump() << "\n";
  }
  json summary;
  summary["summary"] = {{"records", records.size()},
                        {"pass", count(Status::Pass)},
                        {"fail", count(Status::Fail)},
                        {"skipped-degenerate", count(Status::Skipped)},
                        {"observation", count(Status::Observation)},
                        {"result", !error.empty() ? "error" : passed() ? "pass" : "fail"}};
  if (!error.empty()) summary["summary"]["error"] = error;
  os << summary.dump() << "\n";
  return os.str();
}

// ---------------------------------------------------------------- configuration

std::vector<const RowSpec*> selected_rows(const std::optional<std::vector<std::string>>& types) {
  std::vector<const RowSpec*> out;
  for (const auto& r : rows()) {
    if (types && std::none_of(types->begin(), types->end(),
                              [&](const std::string& t) { return t == r.id || t == r.family; }))
      continue;
    out.push_back(&r);
  }
  return out;
}

void validate(const CampaignConfig& c) {
  if (c.qs.empty()) throw ConfigError("no value of q given");
  for (unsigned q : c.qs) {
    if (q != 2 && q != 3 && q != 5) throw ConfigError("unsupported q=" + std::to_string(q) + " (use 2, 3 or 5)");
    if (q == 5 && !c.allow_q5) throw ConfigError("q=5 needs --allow-q5");
  }
  if (c.parahorics.empty()) throw ConfigError("no parahoric selected");
  if (c.jobs == 0) throw ConfigError("jobs must be positive");
  if (c.types) {
    if (c.types->empty()) throw ConfigError("empty type filter");
    for (const auto& t : *c.types) {
      bool known = std::any_of(rows().begin(), rows().end(), [&](const RowSpec& r) { return r.id == t || r.family == t; });
      if (!known) throw ConfigError("unknown row or family " + t);
    }
  }
  if (!c.cache_dir.empty()) {
    std::error_code ec;
    fs::create_directories(c.cache_dir, ec);
    if (ec || !fs::is_directory(c.cache_dir)) throw ConfigError("cache directory " + c.cache_dir + " is not usable");
    const fs::path probe = fs::path(c.cache_dir) / ".phr-write-test";
    std::ofstream f(probe);
    if (!f) throw ConfigError("cache directory " + c.cache_dir + " is not writable");
    f.close();
    fs::remove(probe, ec);
  }
}

// ---------------------------------------------------------------- cache

namespace {

constexpr const char* kCacheMagic = "PHRV1";

json table_guard(const Env& env, ParahoricKind k) {
  const Group& G = *env.group(k);
  const auto& cc = G.classes();
  json g;
  g["magic"] = kCacheMagic;
  g["group"] = G.name();
  g["q"] = env.q();
  g["order"] = G.order();
  g["class_sizes"] = cc.sizes;
  std::vector<Key> reps;
  for (Id r : cc.reps) reps.push_back(G.key(r));
  g["class_reps"] = reps;
  g["ell"] = env.mod().ell;
  g["z"] = env.mod().z;
  g["e"] = env.mod().e;
  return g;
}

}  // namespace

std::string cache_path(const std::string& dir, unsigned q, ParahoricKind k) {
  return (fs::path(dir) / ("table-q" + std::to_string(q) + "-" + to_string(k) + ".json")).string();
}

bool load_table(Env& env, ParahoricKind k, const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return false;
  }
  json guard = table_guard(env, k);
  for (const auto& [key, value] : guard.items())
    if (!j.contains(key) || j[key] != value) return false;
  try {
    CharacterTable t;
    t.group = env.group(k);
    t.mod = env.mod();
    for (const auto& row : j.at("irr")) {
      auto vals = row.get<std::vector<std::uint32_t>>();
      if (vals.size() != t.group->classes().count()) return false;
      t.irr.push_back(ClassFunction::from_values(t.group, t.mod, vals));
      t.degrees.push_back(t.irr.back().degree());
    }
    if (!summarize(t).orthogonal) return false;
    env.provide_table(k, std::move(t));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

void store_table(const Env& env, ParahoricKind k, const std::string& path) {
  json j = table_guard(env, k);
  const auto& t = env.table(k);
  json irr = json::array();
  for (const auto& chi : t.irr) {
    std::vector<std::uint32_t> vals(chi.size());
    for (std::size_t c = 0; c < chi.size(); ++c) vals[c] = chi[c];
    irr.push_back(vals);
  }
  j["irr"] = irr;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cannot write " + tmp);
    out << j.dump() << "\n";
    if (!out) throw CacheError("cannot write " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

EnvPtr prepare_env(unsigned q, const std::string& cache_dir, bool allow_q5) {
  if (q == 5 && !allow_q5) throw ConfigError("q=5 needs --allow-q5");
  EnvPtr env = Env::build(q, q == 5 ? gsp4_order(5) : Group::kDefaultCap);
  std::string dir = cache_dir;
  if (dir.empty())
    if (const char* d = std::getenv("PHR_CACHE_DIR")) dir = d;
  if (dir.empty()) return env;
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (auto k : {ParahoricKind::K, ParahoricKind::J}) {
    const std::string path = cache_path(dir, q, k);
    if (!load_table(*env, k, path)) store_table(*env, k, path);
  }
  return env;
}

TableSummary summarize(const CharacterTable& t) {
  TableSummary s;
  s.classes = t.group->classes().count();
  s.degrees = t.degrees;
  for (auto d : t.degrees) s.sum_sq += d * d;
  s.orthogonal = t.size() == s.classes;
  for (std::size_t i = 0; s.orthogonal && i < t.size(); ++i)
    for (std::size_t j = i; s.orthogonal && j < t.size(); ++j)
      s.orthogonal = inner_product(t.irr[i], t.irr[j]) == (i == j ? 1 : 0);
  s.orthogonal = s.orthogonal && s.sum_sq == static_cast<std::int64_t>(t.group->order());
  return s;
}

// ---------------------------------------------------------------- checks

namespace {

using Clock = std::chrono::steady_clock;

std::string pattern(const CharacterTable& t, const std::vector<std::int64_t>& mult) {
  std::map<std::int64_t, std::int64_t> by_degree;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) by_degree[t.degrees[i]] += mult[i];
  if (by_degree.empty()) return "0";
  std::string s;
  for (const auto& [d, m] : by_degree) {
    if (!s.empty()) s += " ";
    s += std::to_string(d) + (m > 1 ? "^" + std::to_string(m) : "");
  }
  return s;
}

std::int64_t expected_constituents(const FormalSum& s) {
  std::int64_t n = 0;
  for (const auto& t : expand_abc(s).terms) n += t.mult;
  return n;
}

bool is_induced(const Term& t) { return t.kind == Term::Borel || t.kind == Term::Siegel || t.kind == Term::Klingen; }

// Runs `body` on a record prefilled from `proto`; an exception is a failure.
template <class F>
void run_check(std::vector<CheckRecord>& out, CheckRecord proto, F&& body) {
  const auto t0 = Clock::now();
  try {
    body(proto);
  } catch (const std::exception& e) {
    proto.status = Status::Fail;
    proto.detail = e.what();
  }
  proto.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  out.push_back(std::move(proto));
}

std::string mismatch(const ClassFunction& a, const ClassFunction& b) {
  long c = a.first_difference(b);
  if (c < 0) return "";
  return "first differing class " + std::to_string(c) + ": " + std::to_string(a.modulus().lift(a[c])) + " vs " +
         std::to_string(b.modulus().lift(b[c]));
}

const std::vector<std::string> kEndoscopic = {"VIa", "VIb", "VIIIa", "VIIIb", "IXa", "IXb", "XIa", "XIb"};

}  // namespace

ClassFunction Verifier::paramodular_model(const Term& t, const Params& p) const {
  const Env& E = env_;
  ClassFunction out(E.group(ParahoricKind::J), E.mod());
  if (p.wild) return out;
  auto ch = [&](int i) { return res_.character(t.c[i], p); };
  switch (t.kind) {
    case Term::Borel: {
      // Induction in stages through the Siegel parabolic.
      Term s = siegel(gl2_ps(t.c[0], t.c[1]), t.c[2]);
      s.mult = t.mult;
      return paramodular_model(s, p);
    }
    case Term::Siegel: {
      // The Siegel model sees sigma only through its Harish-Chandra
      // restriction to the diagonal torus of GL(2).
      const ClassFunction sigma = res_.gl2(t.s1, p);
      const ClassFunction r = hc_restrict(E.models().gl2_borel, sigma);
      const MultChar mu0 = ch(0);
      const std::int64_t n = E.field()->units();
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
          const std::int64_t m = inner_product(r, E.gl1sq(E.chi(a), E.chi(b)));
          if (m) out += E.twist(ParahoricKind::J, mu0, E.siegel_pair_model(E.chi(a), E.chi(b))).scaled(m);
        }
      break;
    }
    case Term::Klingen: {
      const ClassFunction m = E.klingen_pair_model(ch(0), res_.gl2(t.s1, p));
      out = m + E.swapped(m);
      break;
    }
    default: throw DomainError(t.to_string() + " is not induced from a parabolic of GSp(4)");
  }
  return t.mult == 1 ? out : out.scaled(t.mult);
}

ClassFunction Verifier::parent_at(const Term& parent, const Params& p, ParahoricKind k) const {
  switch (k) {
    case ParahoricKind::K: return res_.term(parent, k, p);
    case ParahoricKind::J: return paramodular_model(parent, p);
    default: return hc_restrict(env_.datum(k), res_.term(parent, ParahoricKind::K, p));
  }
}

std::vector<CheckRecord> Verifier::check_row(const RowSpec& r, const Params& p, ParahoricKind k) const {
  std::vector<CheckRecord> out;
  CheckRecord proto;
  proto.q = env_.q();
  proto.row = r.id;
  proto.params = p.to_string(r.params);
  proto.parahoric = to_string(k);
  auto make = [&](const char* check) {
    CheckRecord c = proto;
    c.check = check;
    return c;
  };

  const FormalSum& col = r.column(k);
  std::optional<ClassFunction> F;
  run_check(out, make("resolve"), [&](CheckRecord& c) {
    c.expected = col.to_string();
    F = res_.sum(col, k, p);
    c.computed = "resolved";
  });
  if (!F) return out;
  const CharacterTable& T = levi_table(k);

  run_check(out, make("degree"), [&](CheckRecord& c) {
    const DimPoly d = k == ParahoricKind::K ? r.dim_k : k == ParahoricKind::J ? r.dim_j : degree(col);
    const std::int64_t want = d.eval(env_.q());
    c.expected = d.to_string() + " = " + std::to_string(want);
    c.computed = std::to_string(F->degree());
    c.status = F->degree() == want ? Status::Pass : Status::Fail;
  });

  std::vector<std::int64_t> mult;
  run_check(out, make("character"), [&](CheckRecord& c) {
    c.expected = "genuine character";
    mult = T.decompose_character(*F);
    c.computed = pattern(T, mult);
  });

  if (!mult.empty() || col.is_zero()) {
    run_check(out, make("constituents"), [&](CheckRecord& c) {
      const std::int64_t want = expected_constituents(col);
      std::int64_t got = 0;
      for (auto m : mult) got += m;
      c.expected = std::to_string(want);
      c.computed = std::to_string(got);
      if (got != want) {
        c.status = Status::Skipped;
        c.detail = "parameters not in general position at finite level";
      }
    });
  }

  run_check(out, make("containment"), [&](CheckRecord& c) {
    c.expected = "<= " + r.parent.to_string() + " at " + to_string(k);
    ClassFunction rest = parent_at(r.parent, p, k) - *F;
    auto m = T.decompose_character(rest);
    c.computed = "complement " + pattern(T, m);
  });

  if (col.is_zero()) {
    run_check(out, make("zero"), [&](CheckRecord& c) {
      c.expected = "0 (parent restricts to 0)";
      ClassFunction par = parent_at(r.parent, p, k);
      c.computed = par.is_zero() ? "0" : "parent degree " + std::to_string(par.degree());
      c.status = par.is_zero() ? Status::Pass : Status::Fail;
    });
  } else {
    run_check(out, make("nonzero"), [&](CheckRecord& c) {
      c.expected = "nonzero";
      c.computed = F->is_zero() ? "0" : "nonzero";
      c.status = F->is_zero() ? Status::Fail : Status::Pass;
    });
  }

  if (k == ParahoricKind::K) {
    run_check(out, make("central"), [&](CheckRecord& c) {
      const Field& Fq = *env_.field();
      const Group& G = *env_.group(k);
      const MultChar omega = res_.character(r.central, p);
      const Modulus& m = env_.mod();
      c.expected = "omega = " + r.central.to_string();
      bool ok = true;
      for (Elem x : Fq.nonzero()) {
        const Id z = G.id_of(Mat::scalar(4, x));
        const std::uint32_t want = m.mul(m.from_int(F->degree()), env_.value(omega, x));
        if (F->at(z) != want) {
          ok = false;
          c.detail = "mismatch at scalar " + Fq.to_string(x);
          break;
        }
      }
      c.computed = ok ? "matches on all scalars" : "mismatch";
      c.status = ok ? Status::Pass : Status::Fail;
    });
  }

  if (k == ParahoricKind::J) {
    if (r.k.terms.size() == 1 && is_induced(r.k.terms[0])) {
      run_check(out, make("induced"), [&](CheckRecord& c) {
        c.expected = "paramodular model of " + r.k.terms[0].to_string();
        ClassFunction model = paramodular_model(r.k.terms[0], p);
        c.computed = *F == model ? "equal" : "different";
        c.detail = mismatch(*F, model);
        c.status = *F == model ? Status::Pass : Status::Fail;
      });
    }
    run_check(out, make("swap"), [&](CheckRecord& c) {
      c.expected = "invariant under (a, b) -> (b, a)";
      const bool ok = env_.swapped(*F) == *F;
      c.computed = ok ? "invariant" : "not invariant";
      c.status = ok ? Status::Pass : Status::Fail;
    });
    for (const auto& t : col.terms) {
      if (!t.half) continue;
      run_check(out, make("split"), [&](CheckRecord& c) {
        Term whole = t;
        whole.half = 0;
        whole.mult = 1;
        const std::int64_t want = degree(whole).eval(env_.q()) / 2;
        c.expected = whole.to_string() + " = two halves of degree " + std::to_string(want) + ", one generic";
        auto s = env_.split(res_.term(whole, k, p));
        const std::int64_t g1 = env_.whittaker(s.generic), g2 = env_.whittaker(s.nongeneric);
        c.computed = std::to_string(s.generic.degree()) + " + " + std::to_string(s.nongeneric.degree()) +
                     ", Whittaker multiplicities " + std::to_string(g1) + ", " + std::to_string(g2);
        c.status = s.generic.degree() == want && s.nongeneric.degree() == want && g1 == 1 && g2 == 0 ? Status::Pass
                                                                                                     : Status::Fail;
      });
    }
  }
  return out;
}

std::vector<CheckRecord> Verifier::check_transitivity(const RowSpec& r, const Params& p, ParahoricKind levi) const {
  std::vector<CheckRecord> out;
  CheckRecord proto;
  proto.q = env_.q();
  proto.row = r.id;
  proto.params = p.to_string(r.params);
  proto.parahoric = to_string(levi);

  std::optional<ClassFunction> col;
  auto column = [&]() -> const ClassFunction& {
    if (!col) col = res_.sum(r.column(levi), levi, p);
    return *col;
  };
  auto compare = [&](CheckRecord& c, const ClassFunction& got) {
    const ClassFunction& want = column();
    c.computed = "degree " + std::to_string(got.degree());
    c.status = got == want ? Status::Pass : Status::Fail;
    c.detail = mismatch(got, want);
  };

  CheckRecord c = proto;
  c.check = "hc-from-K";
  run_check(out, c, [&](CheckRecord& c) {
    c.expected = r.column(levi).to_string();
    compare(c, hc_restrict(env_.datum(levi), res_.sum(r.k, ParahoricKind::K, p)));
  });
  if (levi == ParahoricKind::B || levi == ParahoricKind::Q) {
    c.check = "hc-from-J";
    run_check(out, c, [&](CheckRecord& c) {
      c.expected = r.column(levi).to_string();
      const auto& d = levi == ParahoricKind::B ? env_.models().j_borel : env_.models().j_klingen;
      compare(c, hc_restrict(d, res_.sum(r.j, ParahoricKind::J, p)));
    });
  }
  return out;
}

std::vector<CheckRecord> Verifier::check_family(const Family& f, const Params& p, ParahoricKind k) const {
  std::vector<CheckRecord> out;
  CheckRecord proto;
  proto.q = env_.q();
  proto.row = f.name;
  proto.params = p.to_string(row(f.rows.front()).params);
  proto.parahoric = to_string(k);

  auto sum_of = [&](const std::vector<std::string>& ids) {
    ClassFunction s(env_.group(k), env_.mod());
    for (const auto& id : ids) s += res_.sum(row(id).column(k), k, p);
    return s;
  };
  auto names = [](const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : "+") + id;
    return s;
  };
  auto compare = [&](CheckRecord& c, const ClassFunction& got, const ClassFunction& want) {
    c.computed = "degree " + std::to_string(got.degree()) + " vs " + std::to_string(want.degree());
    c.status = got == want ? Status::Pass : Status::Fail;
    c.detail = mismatch(got, want);
  };

  CheckRecord c = proto;
  c.check = "siblings";
  run_check(out, c, [&](CheckRecord& c) {
    c.expected = names(f.rows) + " = " + f.parent.to_string();
    compare(c, sum_of(f.rows), parent_at(f.parent, p, k));
  });
  for (const auto& [ids, parent] : f.pairs) {
    c.check = "sibling-pair";
    run_check(out, c, [&](CheckRecord& c) {
      std::vector<std::string> v(ids.begin(), ids.end());
      c.expected = names(v) + " = " + parent.to_string();
      compare(c, sum_of(v), parent_at(parent, p, k));
    });
  }
  return out;
}

std::vector<CheckRecord> Verifier::check_spherical(const std::vector<const RowSpec*>& rs,
                                                   const std::vector<ParahoricKind>& ks) const {
  static const std::array<ParahoricKind, 5> order = {ParahoricKind::K, ParahoricKind::J, ParahoricKind::P,
                                                     ParahoricKind::Q, ParahoricKind::B};
  std::vector<CheckRecord> out;
  const Params p;  // every character trivial
  for (const RowSpec* r : rs) {
    if (!r->spherical) continue;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const ParahoricKind k = order[i];
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) continue;
      CheckRecord c;
      c.q = env_.q();
      c.row = r->id;
      c.params = p.to_string({});
      c.parahoric = to_string(k);
      const int want = (*r->spherical)[i];
      c.expected = std::to_string(want);
      c.check = "spherical";
      run_check(out, c, [&](CheckRecord& c) {
        const std::int64_t got =
            inner_product(res_.sum(r->column(k), k, p), ClassFunction::trivial(env_.group(k), env_.mod()));
        c.computed = std::to_string(got);
        c.status = got == want ? Status::Pass : Status::Fail;
      });
      c.check = "spherical-symbolic";
      run_check(out, c, [&](CheckRecord& c) {
        const std::int64_t got = trivial_multiplicity(r->column(k));
        c.computed = std::to_string(got);
        c.status = got == want ? Status::Pass : Status::Fail;
      });
    }
  }
  return out;
}

std::vector<CheckRecord> Verifier::observe_row(const RowSpec& r, const Params& p) const {
  std::vector<CheckRecord> out;
  CheckRecord c;
  c.check = "generic";
  c.q = env_.q();
  c.row = r.id;
  c.params = p.to_string(r.params);
  c.parahoric = "K";
  c.status = Status::Observation;
  run_check(out, c, [&](CheckRecord& c) {
    c.expected = "-";
    c.computed = "Whittaker multiplicity " + std::to_string(env_.whittaker(res_.sum(r.k, ParahoricKind::K, p)));
    if (std::find(kEndoscopic.begin(), kEndoscopic.end(), r.id.substr(0, r.id.find('-'))) != kEndoscopic.end())
      c.detail = "tabulated assignment, not independently verified";
    c.status = Status::Observation;
  });
  return out;
}

std::vector<CheckRecord> Verifier::observe_chi8() const {
  std::vector<CheckRecord> out;
  for (std::int64_t l : lambda_representatives(env_.q(), "")) {
    Params p;
    p.lambda = l;
    CheckRecord c;
    c.check = "chi8-generic";
    c.q = env_.q();
    c.row = "VIIIa";
    c.params = p.to_string({"Lambda"});
    c.parahoric = "K";
    run_check(out, c, [&](CheckRecord& c) {
      c.expected = "-";
      const std::int64_t w8 = env_.whittaker(res_.named("chi8", p));
      const std::int64_t w7 = env_.whittaker(res_.named("chi7", p));
      c.computed = "chi8 " + std::to_string(w8) + ", chi7 " + std::to_string(w7);
      c.status = Status::Observation;
    });
  }
  return out;
}

// ---------------------------------------------------------------- campaign

Report run_campaign(const CampaignConfig& c, const std::function<void(std::size_t, std::size_t)>& progress) {
  validate(c);
  Report report;
  report.config = c;
  const auto sel = selected_rows(c.types);
  std::set<std::string> sel_ids;
  for (const auto* r : sel) sel_ids.insert(r->id);
  auto has = [&](ParahoricKind k) { return std::find(c.parahorics.begin(), c.parahorics.end(), k) != c.parahorics.end(); };

  for (unsigned q : c.qs) {
    EnvPtr env = prepare_env(q, c.cache_dir, c.allow_q5);
    report.moduli.emplace_back(q, env->mod().ell);
    Verifier V(*env);

    using Task = std::function<std::vector<CheckRecord>()>;
    std::vector<Task> tasks;
    for (const RowSpec* r : sel) {
      if (!instantiable(*r, q)) {
        tasks.push_back([r, q, &c] {
          std::vector<CheckRecord> out;
          for (auto k : c.parahorics) {
            CheckRecord s;
            s.check = "instantiable";
            s.q = q;
            s.row = r->id;
            s.params = "-";
            s.parahoric = to_string(k);
            s.status = Status::Skipped;
            s.expected = "instantiable row";
            s.computed = "not instantiable";
            s.detail = r->tame() ? "for even q there is no tamely ramified quadratic character"
                                 : "no admissible parameters";
            out.push_back(s);
          }
          return out;
        });
        continue;
      }
      for (const Params& p : instances(*r, q)) {
        for (auto k : c.parahorics) {
          tasks.push_back([&V, r, p, k] { return V.check_row(*r, p, k); });
          if (k == ParahoricKind::B || k == ParahoricKind::P || k == ParahoricKind::Q)
            tasks.push_back([&V, r, p, k] { return V.check_transitivity(*r, p, k); });
        }
        if (c.observations && has(ParahoricKind::K)) tasks.push_back([&V, r, p] { return V.observe_row(*r, p); });
      }
    }
    for (const Family& f : families()) {
      if (f.rows.size() < 2) continue;
      if (!std::all_of(f.rows.begin(), f.rows.end(), [&](const std::string& id) { return sel_ids.count(id) > 0; }))
        continue;
      const RowSpec& first = row(f.rows.front());
      if (!instantiable(first, q)) continue;
      for (const Params& p : instances(first, q))
        for (auto k : c.parahorics) tasks.push_back([&V, &f, p, k] { return V.check_family(f, p, k); });
    }
    if (c.spherical) tasks.push_back([&V, &sel, &c] { return V.check_spherical(sel, c.parahorics); });
    if (c.observations && has(ParahoricKind::K) && sel_ids.count("VIIIa"))
      tasks.push_back([&V] { return V.observe_chi8(); });

    std::vector<std::vector<CheckRecord>> results(tasks.size());
    std::atomic<std::size_t> next{0}, done{0};
    std::mutex progress_mu;
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
        try {
          results[i] = tasks[i]();
        } catch (const std::exception& e) {
          CheckRecord f;
          f.check = "task";
          f.q = q;
          f.row = "-";
          f.status = Status::Fail;
          f.detail = e.what();
          results[i] = {f};
        }
        const std::size_t d = ++done;
        if (progress) {
          std::lock_guard<std::mutex> lock(progress_mu);
          progress(d, tasks.size());
        }
      }
    };
    const unsigned n = std::min<std::size_t>(c.jobs, std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& v : results)
      for (auto& rec : v) report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace phr
