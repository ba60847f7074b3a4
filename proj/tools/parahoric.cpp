// Command-line front end: group construction, character tables, the encoded
// tables and verification campaigns.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "phr/error.hpp"
#include "phr/verify.hpp"

using namespace phr;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_q(unsigned q, bool allow_q5) {
  CampaignConfig c;
  c.qs = {q};
  c.allow_q5 = allow_q5;
  validate(c);
}

int cmd_build(unsigned q, bool allow_q5) {
  check_q(q, allow_q5);
  const auto t0 = std::chrono::steady_clock::now();
  auto M = build_models(q, q == 5 ? gsp4_order(5) : Group::kDefaultCap);
  std::cout << "GSp(4," << q << ")        " << M.gsp4->order() << "  classes " << M.gsp4->classes().count() << "\n";
  std::cout << "GL(2," << q << ")         " << M.gl2->order() << "\n";
  std::cout << "(GL(2," << q << ")^2)^0   " << M.j0->order() << "\n";
  std::cout << "GL(2) x GL(1)    " << M.levi_p->order() << "\n";
  std::cout << "GL(1) x GSp(2)   " << M.levi_q->order() << "\n";
  std::cout << "GL(1)^3          " << M.levi_b->order() << "\n";
  std::cout << "index of Borel " << M.borel.index() << ", Siegel " << M.siegel.index() << ", Klingen "
            << M.klingen.index() << "\n";
  std::cout << std::fixed << std::setprecision(2) << "built in " << seconds_since(t0) << " s\n";
  return 0;
}

int cmd_chartab(const std::string& name, unsigned q, const std::string& cache_dir, bool allow_q5) {
  check_q(q, allow_q5);
  const auto t0 = std::chrono::steady_clock::now();
  EnvPtr env = prepare_env(q, cache_dir, allow_q5);
  const auto& M = env->models();
  GroupPtr g;
  if (name == "gsp4") g = M.gsp4;
  else if (name == "sp4") g = subgroup(M.gsp4, [&](const Mat& x) { return similitude(*M.field, x) == Elem{1}; }, "Sp4").group;
  else if (name == "gl2") g = M.gl2;
  else if (name == "j0") g = M.j0;
  else if (name == "levi_b") g = M.levi_b;
  else if (name == "levi_p") g = M.levi_p;
  else if (name == "levi_q") g = M.levi_q;
  else if (name == "gl1") g = M.gl1;
  else if (name == "gl1sq") g = M.gl1sq;
  else throw ConfigError("unknown group " + name + " (gsp4, sp4, gl2, j0, levi_b, levi_p, levi_q, gl1, gl1sq)");
  CharacterTable own;
  const CharacterTable* t = nullptr;
  for (auto k : all_parahorics())
    if (env->group(k) == g) t = &env->table(k);
  if (!t) {
    own = dixon_table(g, env->mod());
    t = &own;
  }
  TableSummary s = summarize(*t);
  std::cout << g->name() << " over F_" << q << ": order " << g->order() << ", " << s.classes << " classes, modulus "
            << env->mod().ell << "\n";
  std::cout << "degrees:";
  for (auto d : s.degrees) std::cout << " " << d;
  std::cout << "\nsum of squared degrees " << s.sum_sq << (s.sum_sq == static_cast<std::int64_t>(g->order()) ? " = |G|" : " != |G|")
            << "\northogonality " << (s.orthogonal ? "exact" : "FAILED") << "\n";
  std::cout << std::fixed << std::setprecision(2) << "computed in " << seconds_since(t0) << " s\n";
  return s.orthogonal ? 0 : 1;
}

void print_summary(const Report& r, std::ostream& os) {
  os << "records " << r.records.size() << ": pass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail)
     << ", skipped-degenerate " << r.count(Status::Skipped) << ", observation " << r.count(Status::Observation) << "\n";
  for (const auto& c : r.records)
    if (c.status == Status::Fail)
      os << "FAIL " << c.check << " q=" << c.q << " " << c.row << " [" << c.params << "] " << c.parahoric
         << ": expected " << c.expected << ", computed " << c.computed << (c.detail.empty() ? "" : " (" + c.detail + ")")
         << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parahoric restriction tables for GSp(4): finite-level construction and verification"};
  app.require_subcommand(1);
  std::string cache_dir;
  bool allow_q5 = false;
  app.add_option("--cache-dir", cache_dir, "character table cache (default: $PHR_CACHE_DIR)");
  app.add_flag("--allow-q5", allow_q5, "permit q = 5 (GSp(4,5) has 37440000 elements)");

  unsigned q = 3;
  auto* build = app.add_subcommand("build", "construct the groups and parabolics");
  build->add_option("--q", q, "residue field order")->required();

  std::string group = "gsp4";
  auto* chartab = app.add_subcommand("chartab", "compute a character table and check orthogonality");
  chartab->add_option("--group", group, "gsp4, sp4, gl2, j0, levi_b, levi_p, levi_q, gl1, gl1sq")->required();
  chartab->add_option("--q", q, "residue field order")->required();

  auto* tables = app.add_subcommand("tables", "encoded tables");
  auto* dump = tables->add_subcommand("dump", "print every encoded row");
  tables->require_subcommand(1);

  std::vector<unsigned> qs;
  std::string parahoric = "all";
  std::vector<std::string> types;
  std::string report_path;
  unsigned jobs = 1;
  bool strict = false, no_timing = false, no_observations = false;
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--q", qs, "residue field order(s)")->required();
  verify->add_option("--parahoric", parahoric, "K, J, B, P, Q or all");
  auto* types_opt = verify->add_option("--types", types, "row ids or families, e.g. IVa Va-t VI")->expected(0, -1);
  verify->add_option("--report", report_path, "JSON-lines report path");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--strict", strict, "treat skipped-degenerate records as failures");
  verify->add_flag("--no-timing", no_timing, "omit elapsed times from the report");
  verify->add_flag("--no-observations", no_observations, "skip genericity observations");

  unsigned sq = 3;
  auto* spherical = app.add_subcommand("spherical", "parahori-spherical dimensions of the unramified rows");
  spherical->add_option("--q", sq, "residue field order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(q, allow_q5);
    if (*chartab) return cmd_chartab(group, q, cache_dir, allow_q5);
    if (*dump) {
      std::cout << dump_tables();
      return 0;
    }
    if (*verify) {
      CampaignConfig c;
      c.qs = qs;
      c.cache_dir = cache_dir;
      c.allow_q5 = allow_q5;
      c.jobs = jobs;
      c.strict = strict;
      c.timing = !no_timing;
      c.observations = !no_observations;
      if (parahoric != "all") c.parahorics = {parse_parahoric(parahoric)};
      if (types_opt->count() > 0) {
        types.erase(std::remove(types.begin(), types.end(), std::string()), types.end());
        c.types = types;
      }
      Report r;
      r.config = c;
      try {
        r = run_campaign(c, [](std::size_t d, std::size_t n) {
          std::cerr << "\r" << d << "/" << n << std::flush;
          if (d == n) std::cerr << "\n";
        });
      } catch (const ConfigError& e) {
        r.error = e.what();
        if (!report_path.empty()) std::ofstream(report_path) << r.to_jsonl();
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
      }
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
          std::cerr << "cannot write report " << report_path << "\n";
          return 2;
        }
        out << r.to_jsonl();
      }
      print_summary(r, std::cout);
      return r.passed() ? 0 : 1;
    }
    if (*spherical) {
      CampaignConfig c;
      c.qs = {sq};
      c.allow_q5 = allow_q5;
      validate(c);
      EnvPtr env = prepare_env(sq, cache_dir, allow_q5);
      Verifier V(*env);
      std::vector<const RowSpec*> rs;
      for (const auto& r : rows())
        if (r.spherical) rs.push_back(&r);
      auto recs = V.check_spherical(rs, all_parahorics());
      std::map<std::string, std::map<std::string, std::string>> grid;
      bool ok = true;
      for (const auto& rec : recs) {
        if (rec.check != "spherical") continue;
        grid[rec.row][rec.parahoric] = rec.computed;
        ok = ok && rec.status == Status::Pass;
      }
      for (const auto& rec : recs) ok = ok && rec.status == Status::Pass;
      std::cout << "row     K  J  P  Q  B\n";
      for (const auto* r : rs) {
        std::cout << std::left << std::setw(6) << r->id;
        for (const char* k : {"K", "J", "P", "Q", "B"}) std::cout << std::right << std::setw(3) << grid[r->id][k];
        std::cout << "\n";
      }
      std::cout << (ok ? "matches the table of spherical dimensions\n" : "MISMATCH with the table of spherical dimensions\n");
      return ok ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
