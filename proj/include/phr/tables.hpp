#pragma once

// Symbolic encoding of the parahoric restriction tables for the non-cuspidal
// representations of GSp(4,F), the GL(2) table, the spherical-vector table,
// and resolution of table entries to class functions through fingerprints.

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "phr/indres.hpp"

namespace phr {

// Product of the residual characters mu0, mu1, mu2, xi, lambda0 and Lambda|
// with integer exponents.
struct CharExpr {
  enum Sym { Mu0, Mu1, Mu2, Xi, Lam0, LamRes, kSyms };
  std::array<int, kSyms> e{};

  static CharExpr one() { return {}; }
  static CharExpr sym(Sym s, int k = 1) {
    CharExpr c;
    c.e[s] = k;
    return c;
  }
  CharExpr operator*(const CharExpr& o) const;
  CharExpr inverse() const;
  CharExpr pow(int k) const;
  bool operator==(const CharExpr& o) const { return e == o.e; }
  bool operator<(const CharExpr& o) const { return e < o.e; }
  bool is_one() const;
  std::string to_string() const;
};

// A representation of GL(2,q) = GSp(2,q): a (mu o det)-twist of Ione, St,
// the principal series a x b, the cuspidal pi_Lambda or its contragredient.
struct GL2Expr {
  enum Kind { One, St, PS, Cusp, CuspDual };
  Kind kind = One;
  CharExpr a, b;  // twist for One/St/Cusp/CuspDual; characters of a x b for PS

  bool operator==(const GL2Expr& o) const { return kind == o.kind && a == o.a && b == o.b; }
  bool operator<(const GL2Expr& o) const;
  std::string to_string() const;
};

GL2Expr gl2_one(CharExpr a = {});
GL2Expr gl2_st(CharExpr a = {});
GL2Expr gl2_ps(CharExpr a, CharExpr b);
GL2Expr gl2_cusp(CharExpr twist = {});
GL2Expr gl2_cusp_dual(CharExpr twist = {});
// mu ⋊ chi on GSp(2) is (mu chi) x chi.
GL2Expr gsp2_ps(CharExpr mu, CharExpr chi);

struct Term {
  enum Kind { LeviB, LeviP, LeviQ, ABC, Borel, Siegel, Klingen, Pair, Named };
  Kind kind = Named;
  int mult = 1;
  std::array<CharExpr, 3> c{};  // LeviB/ABC/Borel: three characters; LeviP/Siegel: c[0] = mu0; LeviQ/Klingen: c[0] = mu1
  GL2Expr s1, s2;               // LeviP/LeviQ/Siegel/Klingen: s1; Pair: both
  CharExpr twist;               // Pair: mu0 in mu0[s1, s2]; Named: the argument
  int half = 0;                 // Pair: 0 whole, +1 generic, -1 non-generic
  char abc = 'A';
  std::string name;             // Named symbol, or the K symbol of an induced term

  std::string to_string() const;
};

Term operator*(int k, Term t);
Term levi_b(CharExpr a1, CharExpr a2, CharExpr a0);
Term levi_p(GL2Expr s, CharExpr mu0);
Term levi_q(CharExpr mu1, GL2Expr s);
Term abc(char kind, CharExpr a1, CharExpr a2, CharExpr a0);
Term borel(CharExpr a1, CharExpr a2, CharExpr a0, std::string label = "");
Term siegel(GL2Expr s, CharExpr mu0, std::string label = "");
Term klingen(CharExpr mu1, GL2Expr s, std::string label = "");
Term pair(GL2Expr s1, GL2Expr s2, CharExpr twist = {}, int half = 0);
Term named(std::string name, CharExpr arg = {});

struct FormalSum {
  std::vector<Term> terms;  // empty means 0
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

// Polynomial in q with rational coefficients.
class DimPoly {
 public:
  DimPoly() = default;
  // Coefficients of q^0, q^1, ... with a common denominator.
  DimPoly(std::vector<std::int64_t> coeffs, std::int64_t den = 1);
  static DimPoly constant(std::int64_t c) { return DimPoly({c}); }
  static DimPoly q() { return DimPoly({0, 1}); }

  DimPoly operator+(const DimPoly& o) const;
  DimPoly operator*(const DimPoly& o) const;
  DimPoly scaled(std::int64_t num, std::int64_t den = 1) const;
  bool operator==(const DimPoly& o) const { return num_ == o.num_ && den_ == o.den_; }
  // Throws DomainError if the value is not an integer.
  std::int64_t eval(std::int64_t q) const;
  std::string to_string() const;

 private:
  void normalize();
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

enum class Flavor { None, Unramified, Tame };

struct RowSpec {
  std::string id;       // "I", "IIa", ..., "Va" / "Va-t", "IXa" / "IXa-t"
  std::string type;     // Sally-Tadic label without flavor
  Flavor flavor = Flavor::None;
  std::string rho;      // the representation of GSp(4,F)
  std::string enomoto;  // even-q K column, "-" if none
  FormalSum k, j, b, p, q;
  DimPoly dim_k, dim_j;
  CharExpr central;
  Term parent;          // the induced representation of GSp(4,q) containing the K column
  std::string family;   // rows sharing a parent decomposition
  std::vector<std::string> params;  // subset of "mu0", "mu1", "mu2", "Lambda"
  // Constraint on Lambda: "" general position, "res1" Lambda| = 1, "lam0" Lambda^(q-1) = Lambda0.
  std::string lambda_rule;
  std::optional<std::array<int, 5>> spherical;  // K, J, P, Q, B

  const FormalSum& column(ParahoricKind k) const;
  bool tame() const { return flavor == Flavor::Tame; }
  bool cuspidal_support() const;  // rows VII-XI
};

const std::vector<RowSpec>& rows();
const RowSpec& row(const std::string& id);  // throws DomainError

// A sibling family: its rows and the identities among their K columns and
// the parent's constituents.
struct Family {
  std::string name;
  std::vector<std::string> rows;
  Term parent;
  // Sums of two siblings that form an induced representation.
  std::vector<std::pair<std::array<std::string, 2>, Term>> pairs;
};
const std::vector<Family>& families();

// Named constituents: degree, generic flag when fixed, and the references used
// to resolve them.
struct FingerprintSpec {
  std::string name;
  DimPoly degree;
  std::optional<bool> generic;
  std::vector<std::string> references;  // reference inductions by name
  std::vector<bool> pattern;            // membership in each reference
  std::string even_alias;               // Enomoto's name for even q
  bool odd_only = false;
};
const std::vector<FingerprintSpec>& fingerprints();
const FingerprintSpec& fingerprint(const std::string& name);

// Degree of a symbolic term as a polynomial in q.
DimPoly degree(const Term& t);
DimPoly degree(const FormalSum& s);
DimPoly degree(const GL2Expr& s);

// GL(2): restriction at GL(2,o) and at the Iwahori.
struct GL2Row {
  std::string kind;  // principal, one-dim, steinberg, cuspidal-depth0, positive-depth
  std::string rho;
  std::optional<GL2Expr> k;  // nullopt means 0
  std::vector<std::pair<CharExpr, CharExpr>> b;
  bool cuspidal_k = false;   // "cuspidal irreducible"
};
const std::vector<GL2Row>& gl2_rows();
const GL2Row& gl2_expected(const std::string& kind);

// A, B and C sums written out as Levi characters; other terms unchanged.
FormalSum expand_abc(const Term& t);
FormalSum expand_abc(const FormalSum& s);
// Restriction to the paramodular Levi model of a Borel, Siegel or Klingen
// induced representation of GSp(4,q), as a sum of pairs.
FormalSum paramodular_restriction(const Term& induced);

// Multiplicity of the trivial representation in a table entry when every
// unramified character is trivial.
std::int64_t trivial_multiplicity(const FormalSum& s);

// Residual parameters of one row instance.
struct Params {
  std::int64_t mu0 = 0, mu1 = 0, mu2 = 0;
  std::int64_t lambda = 1;  // exponent over F_{q^2}
  bool tame = false;        // xi reduces to lambda0
  bool wild = false;        // some character wildly ramified: everything restricts to 0
  // Only the named parameters ("mu0", "mu1", "mu2", "Lambda"); "trivial" if none.
  std::string to_string(const std::vector<std::string>& names) const;
};

// Representatives of general-position Lambda up to Frobenius satisfying the rule.
std::vector<std::int64_t> lambda_representatives(unsigned q, const std::string& rule);
// Every residual parameter instance of the row at q; empty if not instantiable.
std::vector<Params> instances(const RowSpec& r, unsigned q);
bool instantiable(const RowSpec& r, unsigned q);

// Evaluates table entries in a computed environment.  Named symbols are
// resolved once per parameter and cached.
class Resolver {
 public:
  explicit Resolver(const Env& env) : env_(env) {}

  const Env& env() const { return env_; }
  MultChar character(const CharExpr& c, const Params& p) const;
  MultChar lambda(const Params& p) const { return env_.ext_char(p.lambda); }
  ClassFunction gl2(const GL2Expr& s, const Params& p) const;
  ClassFunction term(const Term& t, ParahoricKind k, const Params& p) const;
  ClassFunction sum(const FormalSum& s, ParahoricKind k, const Params& p) const;
  // Named constituent before any twist; throws ComputationError on an
  // ambiguous fingerprint.
  ClassFunction named(const std::string& name, const Params& p) const;
  // Reference induction by name ("Ione⋊1", "lambda0 St⋊1", "1⋊pi", ...).
  ClassFunction reference(const std::string& name, const Params& p) const;

 private:
  const Env& env_;
  mutable std::mutex mu_;
  mutable std::map<std::string, ClassFunction> cache_;
};

// Human-readable listing of every encoded row.
std::string dump_tables();

}  // namespace phr
