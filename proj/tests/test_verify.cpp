#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phr/error.hpp"
#include "phr/verify.hpp"

using namespace phr;
namespace fs = std::filesystem;

namespace {

const Env& env3() {
  static EnvPtr e = Env::build(3);
  return *e;
}

std::vector<nlohmann::json> parse(const std::string& jsonl) {
  std::vector<nlohmann::json> out;
  std::istringstream in(jsonl);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

const CheckRecord* find(const std::vector<CheckRecord>& v, const std::string& check) {
  for (const auto& r : v)
    if (r.check == check) return &r;
  return nullptr;
}

Status status_of(const std::vector<CheckRecord>& v, const std::string& check) {
  const CheckRecord* r = find(v, check);
  REQUIRE(r != nullptr);
  return r->status;
}

fs::path temp_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("phr-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PHR_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("row checks pass on the encoded tables") {
  Verifier V(env3());
  Params p;
  auto recs = V.check_row(row("IVa"), p, ParahoricKind::K);
  for (const auto& r : recs) CHECK_MESSAGE(r.status != Status::Fail, r.check << " " << r.detail);
  const CheckRecord* d = find(recs, "degree");
  REQUIRE(d);
  CHECK(d->computed == "81");
  CHECK(status_of(recs, "central") == Status::Pass);
  CHECK(status_of(recs, "containment") == Status::Pass);

  auto vt = V.check_row(row("Va-t"), instances(row("Va-t"), 3)[0], ParahoricKind::K);
  CHECK(find(vt, "degree")->computed == "90");
  CHECK(find(vt, "constituents")->computed == "1");
  CHECK(status_of(vt, "containment") == Status::Pass);

  Params lp;
  lp.lambda = 2;
  auto xi = V.check_row(row("XIa"), lp, ParahoricKind::J);
  CHECK(status_of(xi, "zero") == Status::Pass);
  CHECK(find(xi, "degree")->computed == "0");

  auto ij = V.check_row(row("I"), p, ParahoricKind::J);
  CHECK(status_of(ij, "induced") == Status::Pass);
  CHECK(status_of(ij, "swap") == Status::Pass);
  CHECK(find(ij, "degree")->computed == "32");
}

TEST_CASE("checks detect wrong table entries") {
  const Env& E = env3();
  Verifier V(E);
  Params p;
  const auto M0 = CharExpr::sym(CharExpr::Mu0);

  RowSpec bad = row("IVa");
  bad.dim_k = DimPoly({0, 0, 0, 1});
  CHECK(status_of(V.check_row(bad, p, ParahoricKind::K), "degree") == Status::Fail);

  bad = row("IVa");
  bad.central = M0;
  p.mu0 = 1;
  CHECK(status_of(V.check_row(bad, p, ParahoricKind::K), "central") == Status::Fail);
  p.mu0 = 0;

  bad = row("IVa");
  bad.q = FormalSum{{levi_q({}, gl2_one(M0))}};
  CHECK(status_of(V.check_transitivity(bad, p, ParahoricKind::Q), "hc-from-K") == Status::Fail);
  CHECK(status_of(V.check_transitivity(bad, p, ParahoricKind::Q), "hc-from-J") == Status::Fail);

  bad = row("IVb");
  bad.j = FormalSum{{pair(gl2_st(), gl2_st(), M0), pair(gl2_one(), gl2_st(), M0), pair(gl2_one(), gl2_st(), M0)}};
  CHECK(status_of(V.check_row(bad, p, ParahoricKind::J), "swap") == Status::Fail);

  // A constituent outside the parent.
  bad = row("IVd");
  bad.k = FormalSum{{named("theta0", M0), named("theta0", M0)}};
  CHECK(status_of(V.check_row(bad, p, ParahoricKind::K), "containment") == Status::Fail);

  bad = row("I");
  bad.j = FormalSum{{pair(gl2_ps({}, CharExpr::sym(CharExpr::Mu1)), gl2_ps({}, CharExpr::sym(CharExpr::Mu1)), M0)}};
  p.mu2 = 1;
  CHECK(status_of(V.check_row(bad, p, ParahoricKind::J), "induced") == Status::Fail);
}

TEST_CASE("family checks") {
  Verifier V(env3());
  for (const char* name : {"IV", "V", "V-t", "VI", "VIII", "IX-t", "XI"}) {
    const Family* f = nullptr;
    for (const auto& x : families())
      if (x.name == name) f = &x;
    REQUIRE(f);
    const auto ps = instances(row(f->rows.front()), 3);
    REQUIRE(!ps.empty());
    for (auto k : all_parahorics())
      for (const auto& r : V.check_family(*f, ps.back(), k)) {
        INFO(name << " " << to_string(k) << " " << r.expected << " " << r.detail);
        CHECK(r.status == Status::Pass);
      }
  }
}

TEST_CASE("paramodular model agrees with the pair constructions") {
  const Env& E = env3();
  Verifier V(E);
  const Resolver& R = V.resolver();
  const auto M0 = CharExpr::sym(CharExpr::Mu0), M1 = CharExpr::sym(CharExpr::Mu1), M2 = CharExpr::sym(CharExpr::Mu2);
  for (std::int64_t a = 0; a < 2; ++a)
    for (std::int64_t b = 0; b < 2; ++b)
      for (std::int64_t c = 0; c < 2; ++c) {
        Params p;
        p.mu0 = a;
        p.mu1 = b;
        p.mu2 = c;
        p.lambda = 5;
        for (const Term& t : {borel(M1, M2, M0), siegel(gl2_st(M1), M0), siegel(gl2_one(M1), M0),
                              siegel(gl2_ps(M1, M2), M0), klingen(M1, gl2_st(M0)), klingen(M1, gl2_cusp()),
                              siegel(gl2_cusp(), M0)}) {
          INFO(t.to_string() << " " << p.to_string({"mu0", "mu1", "mu2"}));
          CHECK(V.paramodular_model(t, p) == R.sum(paramodular_restriction(t), ParahoricKind::J, p));
        }
      }
  CHECK_THROWS_AS(V.paramodular_model(levi_b({}, {}, {}), Params{}), DomainError);
}

TEST_CASE("spherical table at q = 3") {
  Verifier V(env3());
  auto recs = V.check_spherical(selected_rows(std::nullopt), all_parahorics());
  CHECK(recs.size() == 17 * 5 * 2);
  for (const auto& r : recs) CHECK_MESSAGE(r.status == Status::Pass, r.row << " " << r.parahoric);
  for (const auto& r : recs)
    if (r.row == "Vd" && r.check == "spherical" && r.parahoric == "P") CHECK(r.computed == "2");
}

TEST_CASE("campaign at q = 2") {
  CampaignConfig c;
  c.qs = {2};
  c.timing = false;
  Report r = run_campaign(c);
  CHECK(r.passed());
  CHECK(r.count(Status::Fail) == 0);
  std::size_t tame_skips = 0;
  for (const auto& x : r.records)
    if (x.check == "instantiable") {
      CHECK(x.status == Status::Skipped);
      CHECK(x.detail.find("even q") != std::string::npos);
      ++tame_skips;
    }
  CHECK(tame_skips == 6 * 5);
  // Deterministic report body.
  CHECK(run_campaign(c).to_jsonl() == r.to_jsonl());
  auto lines = parse(r.to_jsonl());
  CHECK(lines.front()["schema"] == "phr-report/1");
  CHECK(lines.front()["moduli"][0]["q"] == 2);
  CHECK(lines.back()["summary"]["records"] == r.records.size());
  CHECK(lines.size() == r.records.size() + 2);
}

TEST_CASE("campaign filters") {
  CampaignConfig c;
  c.qs = {3};
  c.parahorics = {ParahoricKind::K};
  c.types = std::vector<std::string>{"IVa"};
  c.observations = false;
  Report r = run_campaign(c);
  CHECK(r.passed());
  bool saw = false;
  for (const auto& x : r.records) {
    CHECK(x.row == "IVa");
    if (x.check == "degree") {
      CHECK(x.computed == "81");
      saw = true;
    }
  }
  CHECK(saw);

  c.types = std::vector<std::string>{"VI"};
  r = run_campaign(c);
  std::set<std::string> seen;
  for (const auto& x : r.records) seen.insert(x.row);
  CHECK(seen.count("VIa"));
  CHECK(seen.count("VI"));  // family record
  CHECK_FALSE(seen.count("IVa"));

  c.types = std::vector<std::string>{};
  CHECK_THROWS_AS(run_campaign(c), ConfigError);
  c.types = std::vector<std::string>{"XII"};
  CHECK_THROWS_AS(run_campaign(c), ConfigError);
  c.types.reset();
  c.qs = {4};
  CHECK_THROWS_AS(run_campaign(c), ConfigError);
  c.qs = {5};
  CHECK_THROWS_AS(run_campaign(c), ConfigError);
  c.qs = {3};
  c.jobs = 0;
  CHECK_THROWS_AS(run_campaign(c), ConfigError);
}

TEST_CASE("parallel campaign gives the same report") {
  CampaignConfig c;
  c.qs = {3};
  c.types = std::vector<std::string>{"I", "V-t", "VIII", "X"};
  c.timing = false;
  Report serial = run_campaign(c);
  c.jobs = 3;
  Report parallel = run_campaign(c);
  CHECK(serial.to_jsonl() == parallel.to_jsonl());
  CHECK(serial.passed());
}

TEST_CASE("table cache") {
  const fs::path dir = temp_dir("cache");
  EnvPtr cold = prepare_env(2, dir.string());
  const std::string path = cache_path(dir.string(), 2, ParahoricKind::K);
  REQUIRE(fs::exists(path));
  REQUIRE(fs::exists(cache_path(dir.string(), 2, ParahoricKind::J)));

  EnvPtr fresh = Env::build(2);
  CHECK(load_table(*fresh, ParahoricKind::K, path));
  CHECK(fresh->has_table(ParahoricKind::K));
  const auto& a = fresh->table(ParahoricKind::K);
  const auto& b = cold->table(ParahoricKind::K);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a.irr[i].size(); ++c) CHECK(a.irr[i][c] == b.irr[i][c]);

  // Guard: a different modulus is rejected.
  nlohmann::json j;
  std::ifstream(path) >> j;
  j["ell"] = j["ell"].get<std::uint32_t>() + 2;
  std::ofstream(dir / "bad-mod.json") << j.dump();
  EnvPtr e2 = Env::build(2);
  CHECK_FALSE(load_table(*e2, ParahoricKind::K, (dir / "bad-mod.json").string()));
  // Corrupted values are rejected.
  std::ifstream(path) >> j;
  j["irr"][1][1] = 3;
  std::ofstream(dir / "bad-val.json") << j.dump();
  CHECK_FALSE(load_table(*e2, ParahoricKind::K, (dir / "bad-val.json").string()));
  std::ofstream(dir / "junk.json") << "not json";
  CHECK_FALSE(load_table(*e2, ParahoricKind::K, (dir / "junk.json").string()));
  CHECK_FALSE(load_table(*e2, ParahoricKind::K, (dir / "missing.json").string()));
  CHECK_FALSE(e2->has_table(ParahoricKind::K));

  // Warm and cold campaigns agree.
  CampaignConfig c;
  c.qs = {2};
  c.timing = false;
  c.cache_dir = (dir / "campaign").string();
  const std::string first = run_campaign(c).to_jsonl();
  const std::string second = run_campaign(c).to_jsonl();
  CHECK(first == second);
  c.cache_dir.clear();
  CHECK(run_campaign(c).to_jsonl() == first);
  fs::remove_all(dir);
}

TEST_CASE("table summaries") {
  const Env& E = env3();
  auto s = summarize(E.gl2_table());
  CHECK(s.orthogonal);
  CHECK(s.sum_sq == 48);
  CHECK(s.classes == 8);
  auto j = summarize(E.table(ParahoricKind::J));
  CHECK(j.orthogonal);
  CHECK(j.sum_sq == 1152);
}

TEST_CASE("command line") {
  CHECK(run_cli("tables dump") == 0);
  CHECK(run_cli("verify --q 3 --parahoric K --types IVa") == 0);
  CHECK(run_cli("verify --q 2 --parahoric all --no-observations") == 0);
  const fs::path dir = temp_dir("cli");
  const std::string report = (dir / "empty.jsonl").string();
  CHECK(run_cli("verify --q 3 --types --report " + report) == 2);
  REQUIRE(fs::exists(report));
  std::ifstream in(report);
  std::stringstream ss;
  ss << in.rdbuf();
  auto lines = parse(ss.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines.back()["summary"]["records"] == 0);
  CHECK(run_cli("verify --q 7") == 2);
  CHECK(run_cli("verify --q 3 --parahoric X") == 2);
  CHECK(run_cli("verify --q 3 --types Nope") == 2);
  CHECK(run_cli("build --q 2") == 0);
  CHECK(run_cli("chartab --group sp4 --q 2") == 0);
  CHECK(run_cli("chartab --group nonsense --q 2") == 2);
  CHECK(run_cli("spherical --q 2") == 0);
  CHECK(run_cli("frobnicate") == 2);
  fs::remove_all(dir);
}
