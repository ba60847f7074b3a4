#pragma once

// Verification campaigns: per-row checks at each parahoric, transitivity,
// sibling sums, spherical vectors, character-table caching and JSON-lines
// reports.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phr/tables.hpp"

namespace phr {

// Invalid campaign configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Skipped, Observation };
std::string to_string(Status s);  // pass, fail, skipped-degenerate, observation

struct CheckRecord {
  std::string check;
  unsigned q = 0;
  std::string row;  // row id, family name or "-"
  std::string params;
  std::string parahoric;
  Status status = Status::Pass;
  std::string expected;
  std::string computed;
  std::string detail;
  double elapsed_ms = 0;
};

struct CampaignConfig {
  std::vector<unsigned> qs{3};
  std::vector<ParahoricKind> parahorics{ParahoricKind::K, ParahoricKind::J, ParahoricKind::B, ParahoricKind::P,
                                        ParahoricKind::Q};
  // Row ids ("IVa", "Va-t") or family names ("IV", "V-t"); nullopt selects every row.
  std::optional<std::vector<std::string>> types;
  std::string cache_dir;  // empty disables the table cache
  unsigned jobs = 1;
  bool allow_q5 = false;
  bool strict = false;  // skipped-degenerate records count as failures
  bool spherical = true;
  bool observations = true;
  bool timing = true;  // elapsed_ms in the report
};

struct Report {
  CampaignConfig config;
  std::vector<std::pair<unsigned, std::uint32_t>> moduli;  // (q, ell)
  std::vector<CheckRecord> records;
  std::string error;  // configuration error, if the campaign did not run

  std::size_t count(Status s) const;
  bool passed() const;  // no failures (and no skips when strict)
  // Header record, one record per line, summary record.
  std::string to_jsonl() const;
};

// Throws ConfigError for unsupported q, an empty type filter, unknown row
// names or an unusable cache directory.
void validate(const CampaignConfig& c);
// Rows selected by the filter, in table order.
std::vector<const RowSpec*> selected_rows(const std::optional<std::vector<std::string>>& types);

// Environment with K and J tables loaded from or written to the cache
// directory (PHR_CACHE_DIR if `cache_dir` is empty; no cache if both are).
EnvPtr prepare_env(unsigned q, const std::string& cache_dir, bool allow_q5 = false);
// Character table cache: one file per (group, q), guarded by format version,
// group order, class sizes and modulus.  load returns false on any mismatch.
bool load_table(Env& env, ParahoricKind k, const std::string& path);
void store_table(const Env& env, ParahoricKind k, const std::string& path);
std::string cache_path(const std::string& dir, unsigned q, ParahoricKind k);

// Row orthogonality and sum of squared degrees.
struct TableSummary {
  std::size_t classes = 0;
  std::vector<std::int64_t> degrees;
  std::int64_t sum_sq = 0;
  bool orthogonal = false;
};
TableSummary summarize(const CharacterTable& t);

class Verifier {
 public:
  explicit Verifier(const Env& env) : env_(env), res_(env) {}

  const Env& env() const { return env_; }
  const Resolver& resolver() const { return res_; }

  // Degree, genuine-character, constituent count, containment in the parent,
  // central character (K), nonzero-ness, paramodular models of induced rows and the swap
  // and split properties (J).
  std::vector<CheckRecord> check_row(const RowSpec& r, const Params& p, ParahoricKind k) const;
  // Harish-Chandra restriction of the K row (and of the J row for B and Q)
  // against the tabulated Levi column.
  std::vector<CheckRecord> check_transitivity(const RowSpec& r, const Params& p, ParahoricKind levi) const;
  // Sum of siblings, and of the listed sibling pairs, against the parent.
  std::vector<CheckRecord> check_family(const Family& f, const Params& p, ParahoricKind k) const;
  // Trivial multiplicities of the unramified rows at trivial parameters.
  std::vector<CheckRecord> check_spherical(const std::vector<const RowSpec*>& rows,
                                           const std::vector<ParahoricKind>& ks) const;
  std::vector<CheckRecord> observe_row(const RowSpec& r, const Params& p) const;
  std::vector<CheckRecord> observe_chi8() const;

  // The paramodular restriction of a Borel / Siegel / Klingen induced
  // representation from the model inductions, independent of the pair
  // constructions used by the tables.
  ClassFunction paramodular_model(const Term& induced, const Params& p) const;
  // The parent at a parahoric: itself at K, its paramodular model at J, its
  // Harish-Chandra restriction at B, P, Q.
  ClassFunction parent_at(const Term& parent, const Params& p, ParahoricKind k) const;

 private:
  const CharacterTable& levi_table(ParahoricKind k) const { return env_.table(k); }

  const Env& env_;
  Resolver res_;
};

// Runs every planned check; exceptions in one task become failed records.
// `progress` (if set) is called after each task with (done, total).
Report run_campaign(const CampaignConfig& c, const std::function<void(std::size_t, std::size_t)>& progress = {});

}  // namespace phr
