#include "phr/tables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "phr/error.hpp"

namespace phr {

// ---------------------------------------------------------------- symbols

CharExpr CharExpr::operator*(const CharExpr& o) const {
  CharExpr r;
  for (int i = 0; i < kSyms; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

CharExpr CharExpr::inverse() const { return pow(-1); }

CharExpr CharExpr::pow(int k) const {
  CharExpr r;
  for (int i = 0; i < kSyms; ++i) r.e[i] = e[i] * k;
  return r;
}

bool CharExpr::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::string CharExpr::to_string() const {
  static const char* names[kSyms] = {"mu0", "mu1", "mu2", "xi", "lambda0", "Lambda|"};
  static const int order[kSyms] = {Mu1, Mu2, Xi, Lam0, Mu0, LamRes};
  std::string s;
  for (int i : order) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

bool GL2Expr::operator<(const GL2Expr& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (!(a == o.a)) return a < o.a;
  return b < o.b;
}

namespace {

std::string prefix(const CharExpr& a) { return a.is_one() ? "" : a.to_string() + " "; }

}  // namespace

std::string GL2Expr::to_string() const {
  switch (kind) {
    case One: return prefix(a) + "Ione";
    case St: return prefix(a) + "St";
    case PS: return a.to_string() + " x " + b.to_string();
    case Cusp: return prefix(a) + "pi";
    case CuspDual: return prefix(a) + "pi^v";
  }
  return "?";
}

GL2Expr gl2_one(CharExpr a) { return {GL2Expr::One, a, {}}; }
GL2Expr gl2_st(CharExpr a) { return {GL2Expr::St, a, {}}; }
GL2Expr gl2_ps(CharExpr a, CharExpr b) { return {GL2Expr::PS, a, b}; }
GL2Expr gl2_cusp(CharExpr twist) { return {GL2Expr::Cusp, twist, {}}; }
GL2Expr gl2_cusp_dual(CharExpr twist) { return {GL2Expr::CuspDual, twist, {}}; }
GL2Expr gsp2_ps(CharExpr mu, CharExpr chi) { return gl2_ps(mu * chi, chi); }

Term operator*(int k, Term t) {
  t.mult *= k;
  return t;
}

Term levi_b(CharExpr a1, CharExpr a2, CharExpr a0) {
  Term t;
  t.kind = Term::LeviB;
  t.c = {a1, a2, a0};
  return t;
}

Term levi_p(GL2Expr s, CharExpr mu0) {
  Term t;
  t.kind = Term::LeviP;
  t.s1 = s;
  t.c[0] = mu0;
  return t;
}

Term levi_q(CharExpr mu1, GL2Expr s) {
  Term t;
  t.kind = Term::LeviQ;
  t.s1 = s;
  t.c[0] = mu1;
  return t;
}

Term abc(char kind, CharExpr a1, CharExpr a2, CharExpr a0) {
  Term t;
  t.kind = Term::ABC;
  t.abc = kind;
  t.c = {a1, a2, a0};
  return t;
}

Term borel(CharExpr a1, CharExpr a2, CharExpr a0, std::string label) {
  Term t;
  t.kind = Term::Borel;
  t.c = {a1, a2, a0};
  t.name = std::move(label);
  return t;
}

Term siegel(GL2Expr s, CharExpr mu0, std::string label) {
  Term t;
  t.kind = Term::Siegel;
  t.s1 = s;
  t.c[0] = mu0;
  t.name = std::move(label);
  return t;
}

Term klingen(CharExpr mu1, GL2Expr s, std::string label) {
  Term t;
  t.kind = Term::Klingen;
  t.s1 = s;
  t.c[0] = mu1;
  t.name = std::move(label);
  return t;
}

Term pair(GL2Expr s1, GL2Expr s2, CharExpr twist, int half) {
  Term t;
  t.kind = Term::Pair;
  t.s1 = s1;
  t.s2 = s2;
  t.twist = twist;
  t.half = half;
  return t;
}

Term named(std::string name, CharExpr arg) {
  Term t;
  t.kind = Term::Named;
  t.name = std::move(name);
  t.twist = arg;
  return t;
}

std::string Term::to_string() const {
  std::string s;
  const auto& [a1, a2, a0] = c;
  switch (kind) {
    case LeviB: s = a1.to_string() + " ⊠ " + a2.to_string() + " ⊠ " + a0.to_string(); break;
    case LeviP: s = "(" + s1.to_string() + ") ⊠ " + a1.to_string(); break;
    case LeviQ: s = a1.to_string() + " ⊠ (" + s1.to_string() + ")"; break;
    case ABC: s = std::string(1, abc) + "(" + a1.to_string() + ", " + a2.to_string() + ", " + a0.to_string() + ")"; break;
    case Borel: s = a1.to_string() + " x " + a2.to_string() + " ⋊ " + a0.to_string(); break;
    case Siegel: s = "(" + s1.to_string() + ") ⋊ " + a1.to_string(); break;
    case Klingen: s = a1.to_string() + " ⋊ (" + s1.to_string() + ")"; break;
    case Pair:
      s = prefix(twist) + "[" + s1.to_string() + ", " + s2.to_string() + "]";
      if (half) s += half > 0 ? "+" : "-";
      break;
    case Named: s = name + "(" + twist.to_string() + ")"; break;
  }
  if ((kind == Borel || kind == Siegel || kind == Klingen) && !name.empty()) s = name + " = " + s;
  if (mult != 1) s = std::to_string(mult) + "(" + s + ")";
  return s;
}

std::string FormalSum::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += t.to_string();
  }
  return s;
}

// ---------------------------------------------------------------- DimPoly

DimPoly::DimPoly(std::vector<std::int64_t> coeffs, std::int64_t den) : num_(std::move(coeffs)), den_(den) {
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

void DimPoly::normalize() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  std::int64_t g = den_;
  for (auto c : num_) g = std::gcd(g, c);
  if (num_.empty()) g = den_;
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

DimPoly DimPoly::operator+(const DimPoly& o) const {
  std::vector<std::int64_t> r(std::max(num_.size(), o.num_.size()), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) r[i] += num_[i] * o.den_;
  for (std::size_t i = 0; i < o.num_.size(); ++i) r[i] += o.num_[i] * den_;
  return DimPoly(std::move(r), den_ * o.den_);
}

DimPoly DimPoly::operator*(const DimPoly& o) const {
  if (num_.empty() || o.num_.empty()) return DimPoly();
  std::vector<std::int64_t> r(num_.size() + o.num_.size() - 1, 0);
  for (std::size_t i = 0; i < num_.size(); ++i)
    for (std::size_t j = 0; j < o.num_.size(); ++j) r[i + j] += num_[i] * o.num_[j];
  return DimPoly(std::move(r), den_ * o.den_);
}

DimPoly DimPoly::scaled(std::int64_t num, std::int64_t den) const {
  std::vector<std::int64_t> r = num_;
  for (auto& c : r) c *= num;
  return DimPoly(std::move(r), den_ * den);
}

std::int64_t DimPoly::eval(std::int64_t q) const {
  std::int64_t v = 0;
  for (std::size_t i = num_.size(); i-- > 0;) v = v * q + num_[i];
  if (v % den_) throw DomainError("dimension polynomial " + to_string() + " is not integral at q=" + std::to_string(q));
  return v / den_;
}

std::string DimPoly::to_string() const {
  if (num_.empty()) return "0";
  std::string s;
  for (std::size_t i = num_.size(); i-- > 0;) {
    std::int64_t c = num_[i];
    if (!c) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) s += std::to_string(a);
    if (i > 0) s += i == 1 ? "q" : "q^" + std::to_string(i);
  }
  if (den_ != 1) s = "(" + s + ")/" + std::to_string(den_);
  return s;
}

// ---------------------------------------------------------------- tables

namespace {

const CharExpr ONE{};
const CharExpr M0 = CharExpr::sym(CharExpr::Mu0);
const CharExpr M1 = CharExpr::sym(CharExpr::Mu1);
const CharExpr M2 = CharExpr::sym(CharExpr::Mu2);
const CharExpr XI = CharExpr::sym(CharExpr::Xi);
const CharExpr L0 = CharExpr::sym(CharExpr::Lam0);
const CharExpr LR = CharExpr::sym(CharExpr::LamRes);

FormalSum S(std::initializer_list<Term> t) { return FormalSum{std::vector<Term>(t)}; }

DimPoly P(std::vector<std::int64_t> c, std::int64_t den = 1) { return DimPoly(std::move(c), den); }

const GL2Expr ONE2 = gl2_one();
const GL2Expr ST2 = gl2_st();
const GL2Expr PI = gl2_cusp();

// mu0[1 x a, 1 x b] + mu0[1 x b, 1 x a]
FormalSum siegel_pairs(CharExpr a, CharExpr b, CharExpr mu0) {
  return S({pair(gl2_ps(ONE, a), gl2_ps(ONE, b), mu0), pair(gl2_ps(ONE, b), gl2_ps(ONE, a), mu0)});
}

std::vector<RowSpec> build_rows() {
  std::vector<RowSpec> out;
  auto add = [&](RowSpec r) { out.push_back(std::move(r)); };

  // Type I
  {
    RowSpec r;
    r.id = r.type = "I";
    r.rho = "mu1 x mu2 ⋊ mu0";
    r.enomoto = "chi1(k1,k2)";
    r.k = S({borel(M1, M2, M0, "X1")});
    r.dim_k = P({1, 2, 2, 2, 1});
    r.central = M1 * M2 * M0.pow(2);
    r.b = S({abc('A', M1, M2, M0), abc('A', M2, M1, M0)});
    r.q = S({abc('B', M1, M2, M0), abc('B', M2, M1, M0)});
    r.p = S({abc('C', M1, M2, M0), abc('C', M1, M2.inverse(), M2 * M0)});
    r.j = siegel_pairs(M1, M2, M0);
    r.dim_j = P({2, 4, 2});
    r.parent = borel(M1, M2, M0);
    r.family = "I";
    r.params = {"mu0", "mu1", "mu2"};
    r.spherical = std::array<int, 5>{1, 2, 4, 4, 8};
    add(r);
  }
  // Type II
  for (bool st : {true, false}) {
    RowSpec r;
    r.type = "II";
    r.id = st ? "IIa" : "IIb";
    r.rho = st ? "mu1 St ⋊ mu0" : "mu1 Ione ⋊ mu0";
    r.enomoto = st ? "chi10(k1)" : "chi6(k1)";
    auto sig = [&](CharExpr a) { return st ? gl2_st(a) : gl2_one(a); };
    r.k = S({siegel(sig(M1), M0, st ? "chi4" : "chi3")});
    r.dim_k = st ? P({0, 1, 1, 1, 1}) : P({1, 1, 1, 1});
    r.central = M1.pow(2) * M0.pow(2);
    r.b = S({abc('A', M1, M1, M0)});
    r.q = S({abc('B', M1, M1, M0)});
    r.p = S({levi_p(sig(M1), M0), levi_p(sig(M1.inverse()), M0 * M1.pow(2)), levi_p(gl2_ps(M1, M1.inverse()), M0 * M1)});
    r.j = S({pair(gl2_ps(ONE, M1), gl2_ps(ONE, M1), M0)});
    r.dim_j = P({1, 2, 1});
    r.parent = borel(M1, M1, M0);
    r.family = "II";
    r.params = {"mu0", "mu1"};
    r.spherical = st ? std::array<int, 5>{0, 1, 1, 2, 4} : std::array<int, 5>{1, 1, 3, 2, 4};
    add(r);
  }
  // Type III
  for (bool st : {true, false}) {
    RowSpec r;
    r.type = "III";
    r.id = st ? "IIIa" : "IIIb";
    r.rho = st ? "mu1 ⋊ mu0 St" : "mu1 ⋊ mu0 Ione";
    r.enomoto = st ? "chi11(k1)" : "chi7(k1)";
    auto sig = [&](CharExpr a) { return st ? gl2_st(a) : gl2_one(a); };
    r.k = S({klingen(M1, sig(M0), st ? "chi2" : "chi1")});
    r.dim_k = st ? P({0, 1, 1, 1, 1}) : P({1, 1, 1, 1});
    r.central = M1 * M0.pow(2);
    r.b = S({levi_b(M1, ONE, M0), levi_b(M1.inverse(), ONE, M1 * M0), levi_b(ONE, M1, M0),
             levi_b(ONE, M1.inverse(), M1 * M0)});
    r.q = S({levi_q(M1, sig(M0)), levi_q(ONE, gsp2_ps(M1, M0)), levi_q(M1.inverse(), sig(M1 * M0))});
    r.p = S({abc('C', M1, ONE, M0)});
    r.j = S({pair(gl2_ps(ONE, M1), sig(ONE), M0), pair(sig(ONE), gl2_ps(ONE, M1), M0)});
    r.dim_j = st ? P({0, 2, 2}) : P({2, 2});
    r.parent = borel(M1, ONE, M0);
    r.family = "III";
    r.params = {"mu0", "mu1"};
    r.spherical = st ? std::array<int, 5>{0, 0, 2, 1, 4} : std::array<int, 5>{1, 2, 2, 3, 4};
    add(r);
  }
  // Types IV and VI: constituents of 1 x 1 ⋊ mu0.
  const Term b1 = levi_b(ONE, ONE, M0);
  const Term q1 = levi_q(ONE, gl2_one(M0)), qs = levi_q(ONE, gl2_st(M0));
  const Term p1 = levi_p(ONE2, M0), ps = levi_p(ST2, M0);
  const Term j11 = pair(ONE2, ONE2, M0), j1s = pair(ONE2, ST2, M0), js1 = pair(ST2, ONE2, M0), jss = pair(ST2, ST2, M0);
  auto th = [](const char* n) { return named(n, M0); };
  struct Unipotent {
    const char *id, *rho, *enomoto;
    FormalSum k;
    DimPoly dk;
    FormalSum b, q, p, j;
    DimPoly dj;
    std::array<int, 5> sph;
  };
  const std::vector<Unipotent> unip = {
      {"IVa", "mu0 St_GSp(4)", "theta4", S({th("theta5")}), P({0, 0, 0, 0, 1}), S({b1}), S({qs}), S({ps}), S({jss}),
       P({0, 0, 1}), {0, 0, 0, 0, 1}},
      {"IVb", "L(nu^2, nu^-1 mu0 St)", "theta1+theta2", S({th("theta1"), th("theta3")}), P({0, 1, 1, 1}), S({3 * b1}),
       S({q1, 2 * qs}), S({ps, 2 * p1}), S({jss, j1s, js1}), P({0, 2, 1}), {0, 0, 2, 1, 3}},
      {"IVc", "L(nu^3/2 St, nu^-3/2 mu0)", "theta1+theta3", S({th("theta1"), th("theta4")}), P({0, 1, 1, 1}),
       S({3 * b1}), S({2 * q1, qs}), S({2 * ps, p1}), S({j11, j1s, js1}), P({1, 2}), {0, 1, 1, 2, 3}},
      {"IVd", "mu0 Ione_GSp(4)", "theta0", S({th("theta0")}), P({1}), S({b1}), S({q1}), S({p1}), S({j11}), P({1}),
       {1, 1, 1, 1, 1}},
      {"VIa", "tau(S, nu^-1/2 mu0)", "theta1+theta4", S({th("theta1"), th("theta5")}), P({0, 1, 2, 1, 2}, 2),
       S({3 * b1}), S({q1, 2 * qs}), S({2 * ps, p1}), S({jss, js1, j1s}), P({0, 2, 1}), {0, 0, 1, 1, 3}},
      {"VIb", "tau(T, nu^-1/2 mu0)", "theta2", S({th("theta3")}), P({0, 1, 0, 1}, 2), S({b1}), S({qs}), S({p1}),
       S({jss}), P({0, 0, 1}), {0, 0, 1, 0, 1}},
      {"VIc", "L(nu^1/2 St, nu^-1/2 mu0)", "theta3", S({th("theta4")}), P({0, 1, 0, 1}, 2), S({b1}), S({q1}), S({ps}),
       S({j11}), P({1}), {0, 1, 0, 1, 1}},
      {"VId", "L(nu, 1_F^x ⋊ nu^-1/2 mu0)", "theta0+theta1", S({th("theta0"), th("theta1")}), P({2, 1, 2, 1}, 2),
       S({3 * b1}), S({2 * q1, qs}), S({ps, 2 * p1}), S({j11, js1, j1s}), P({1, 2}), {1, 1, 2, 2, 3}},
  };
  auto add_unipotent = [&](const Unipotent& u) {
    RowSpec r;
    r.id = u.id;
    r.type = r.id.substr(0, 2);
    r.rho = u.rho;
    r.enomoto = u.enomoto;
    r.k = u.k;
    r.dim_k = u.dk;
    r.central = M0.pow(2);
    r.b = u.b;
    r.q = u.q;
    r.p = u.p;
    r.j = u.j;
    r.dim_j = u.dj;
    r.parent = borel(ONE, ONE, M0);
    r.family = r.type;
    r.params = {"mu0"};
    r.spherical = u.sph;
    add(r);
  };
  for (int i = 0; i < 4; ++i) add_unipotent(unip[i]);

  // Type V, unramified and tamely ramified xi.
  {
    const Term bv1 = levi_b(XI, XI, M0), bv2 = levi_b(XI, XI, XI * M0);
    const Term qv = levi_q(XI, gsp2_ps(XI, M0));
    struct V {
      const char *id, *rho, *enomoto;
      FormalSum ku, kt;
      DimPoly dku, dkt;
      FormalSum p;
      FormalSum ju;
      DimPoly dju;
      int half;
      std::array<int, 5> sph;
    };
    const std::vector<V> vs = {
        {"Va", "delta([xi, nu xi], nu^-1/2 mu0)", "theta3+theta4", S({th("theta4"), th("theta5")}),
         S({named("tau3", M0)}), P({0, 1, 0, 1, 2}, 2), P({0, 0, 1, 0, 1}),
         S({levi_p(gl2_st(XI), M0), levi_p(gl2_st(XI), XI * M0)}), S({j1s, js1}), P({0, 2}), +1, {0, 0, 0, 1, 2}},
        {"Vb", "L(nu^1/2 xi St, nu^-1/2 mu0)", "theta1", S({th("theta1")}), S({named("tau2", M0)}),
         P({0, 1, 2, 1}, 2), P({0, 1, 0, 1}), S({levi_p(gl2_st(XI), M0), levi_p(gl2_one(XI), XI * M0)}),
         S({j11, jss}), P({1, 0, 1}), -1, {0, 1, 1, 1, 2}},
        {"Vc", "L(nu^1/2 xi St, nu^-1/2 xi mu0)", "theta1", S({th("theta1")}), S({named("tau2", M0 * L0)}),
         P({0, 1, 2, 1}, 2), P({0, 1, 0, 1}), S({levi_p(gl2_one(XI), M0), levi_p(gl2_st(XI), XI * M0)}),
         S({j11, jss}), P({1, 0, 1}), -1, {0, 1, 1, 1, 2}},
        {"Vd", "L(nu xi, xi ⋊ nu^-1/2 mu0)", "theta0+theta2", S({th("theta0"), th("theta3")}), S({named("tau1", M0)}),
         P({2, 1, 0, 1}, 2), P({1, 0, 1}), S({levi_p(gl2_one(XI), M0), levi_p(gl2_one(XI), XI * M0)}),
         S({j1s, js1}), P({0, 2}), +1, {1, 0, 2, 1, 2}},
    };
    for (bool tame : {false, true})
      for (const auto& v : vs) {
        RowSpec r;
        r.type = v.id;
        r.id = tame ? std::string(v.id) + "-t" : v.id;
        r.flavor = tame ? Flavor::Tame : Flavor::Unramified;
        r.rho = v.rho;
        r.enomoto = tame ? "-" : v.enomoto;
        r.k = tame ? v.kt : v.ku;
        r.dim_k = tame ? v.dkt : v.dku;
        r.central = M0.pow(2);
        r.b = S({bv1, bv2});
        r.q = S({qv});
        r.p = v.p;
        if (tame) {
          r.j = S({pair(gl2_ps(ONE, L0), gl2_ps(ONE, L0), M0, v.half)});
          r.dim_j = P({1, 2, 1}, 2);
        } else {
          r.j = v.ju;
          r.dim_j = v.dju;
        }
        r.parent = borel(XI, XI, M0);
        r.family = tame ? "V-t" : "V";
        r.params = {"mu0"};
        if (!tame) r.spherical = v.sph;
        add(r);
      }
  }
  for (int i = 4; i < 8; ++i) add_unipotent(unip[i]);

  // Type VII and VIII: Klingen induced from a cuspidal pi.
  {
    RowSpec r;
    r.id = r.type = "VII";
    r.rho = "mu1 ⋊ pi";
    r.enomoto = "chi3(k1,l')";
    r.k = S({klingen(M1, PI, "X3")});
    r.dim_k = P({-1, 0, 0, 0, 1});
    r.central = M1 * LR;
    r.q = S({levi_q(M1, PI), levi_q(M1.inverse(), gl2_cusp(M1))});
    r.j = S({pair(gl2_ps(ONE, M1), PI), pair(PI, gl2_ps(ONE, M1))});
    r.dim_j = P({-2, 0, 2});
    r.parent = klingen(M1, PI);
    r.family = "VII";
    r.params = {"mu1", "Lambda"};
    add(r);
  }
  for (bool a : {true, false}) {
    RowSpec r;
    r.type = "VIII";
    r.id = a ? "VIIIa" : "VIIIb";
    r.rho = a ? "tau(S, pi)" : "tau(T, pi)";
    r.enomoto = a ? "chi13(l')" : "chi9(l')";
    r.k = S({named(a ? "chi8" : "chi7")});
    r.dim_k = a ? P({0, -1, 1, -1, 1}) : P({-1, 1, -1, 1});
    r.central = LR;
    r.q = S({levi_q(ONE, PI)});
    r.j = a ? S({pair(ONE2, PI), pair(PI, ONE2)}) : S({pair(ST2, PI), pair(PI, ST2)});
    r.dim_j = a ? P({-2, 2}) : P({0, -2, 2});
    r.parent = klingen(ONE, PI);
    r.family = "VIII";
    r.params = {"Lambda"};
    add(r);
  }
  // Type IX: constituents of xi ⋊ pi with xi pi = pi.
  for (bool tame : {false, true})
    for (bool a : {true, false}) {
      RowSpec r;
      r.type = a ? "IXa" : "IXb";
      r.id = tame ? r.type + "-t" : r.type;
      r.flavor = tame ? Flavor::Tame : Flavor::Unramified;
      r.rho = a ? "delta(nu xi, nu^-1/2 pi)" : "L(nu xi, nu^-1/2 pi)";
      r.enomoto = tame ? "-" : (a ? "chi13(l')" : "chi9(l')");
      if (tame) {
        r.k = S({named(a ? "tau5" : "tau4")});
        r.dim_k = a ? P({0, 0, -1, 0, 1}) : P({-1, 0, 1});
        r.central = L0 * LR;
        const int h = a ? -1 : +1;
        r.j = S({pair(PI, gl2_ps(ONE, L0), ONE, h), pair(gl2_ps(ONE, L0), PI, ONE, h)});
        r.dim_j = P({-1, 0, 1});
        r.lambda_rule = "lam0";
      } else {
        r.k = S({named(a ? "chi8" : "chi7")});
        r.dim_k = a ? P({0, -1, 1, -1, 1}) : P({-1, 1, -1, 1});
        r.central = LR;
        r.j = a ? S({pair(ST2, PI), pair(PI, ST2)}) : S({pair(ONE2, PI), pair(PI, ONE2)});
        r.dim_j = a ? P({0, -2, 2}) : P({-2, 2});
      }
      r.q = S({levi_q(XI, PI)});
      r.parent = klingen(XI, PI);
      r.family = tame ? "IX-t" : "IX";
      r.params = {"Lambda"};
      add(r);
    }
  // Type X and XI: Siegel induced from a cuspidal pi.
  {
    RowSpec r;
    r.id = r.type = "X";
    r.rho = "pi ⋊ mu0";
    r.enomoto = "chi2(l)";
    r.k = S({siegel(PI, M0, "X2")});
    r.dim_k = P({-1, 0, 0, 0, 1});
    r.central = M0.pow(2) * LR;
    r.p = S({levi_p(PI, M0), levi_p(gl2_cusp_dual(), LR * M0)});
    r.parent = siegel(PI, M0);
    r.family = "X";
    r.params = {"mu0", "Lambda"};
    add(r);
  }
  for (bool a : {true, false}) {
    RowSpec r;
    r.type = "XI";
    r.id = a ? "XIa" : "XIb";
    r.rho = a ? "delta(nu^1/2 pi, nu^-1/2 mu0)" : "L(nu^1/2 pi, nu^-1/2 mu0)";
    r.enomoto = a ? "chi12(l'')" : "chi8(l'')";
    r.k = S({named(a ? "chi6" : "chi5", M0)});
    r.dim_k = a ? P({0, -1, 1, -1, 1}) : P({-1, 1, -1, 1});
    r.central = M0.pow(2);
    r.p = S({levi_p(PI, M0)});
    r.parent = siegel(PI, M0);
    r.family = "XI";
    r.params = {"mu0", "Lambda"};
    r.lambda_rule = "res1";
    add(r);
  }
  return out;
}

std::vector<Family> build_families() {
  const GL2Expr one0 = gl2_one(M0), st0 = gl2_st(M0);
  std::vector<Family> f;
  f.push_back({"I", {"I"}, borel(M1, M2, M0), {}});
  f.push_back({"II", {"IIa", "IIb"}, borel(M1, M1, M0), {}});
  f.push_back({"III", {"IIIa", "IIIb"}, borel(M1, ONE, M0), {}});
  f.push_back({"IV",
               {"IVa", "IVb", "IVc", "IVd"},
               borel(ONE, ONE, M0),
               {{{"IVb", "IVd"}, siegel(ONE2, M0)},
                {{"IVc", "IVd"}, klingen(ONE, one0)},
                {{"IVa", "IVb"}, klingen(ONE, st0)},
                {{"IVa", "IVc"}, siegel(ST2, M0)}}});
  for (bool tame : {false, true}) {
    std::string t = tame ? "-t" : "";
    f.push_back({"V" + t,
                 {"Va" + t, "Vb" + t, "Vc" + t, "Vd" + t},
                 borel(XI, XI, M0),
                 {{{"Va" + t, "Vb" + t}, siegel(gl2_st(XI), M0)},
                  {{"Va" + t, "Vc" + t}, siegel(gl2_st(XI), XI * M0)},
                  {{"Vc" + t, "Vd" + t}, siegel(gl2_one(XI), M0)},
                  {{"Vb" + t, "Vd" + t}, siegel(gl2_one(XI), XI * M0)}}});
  }
  f.push_back({"VI",
               {"VIa", "VIb", "VIc", "VId"},
               borel(ONE, ONE, M0),
               {{{"VIa", "VIb"}, klingen(ONE, st0)},
                {{"VIa", "VIc"}, siegel(ST2, M0)},
                {{"VIb", "VId"}, siegel(ONE2, M0)},
                {{"VIc", "VId"}, klingen(ONE, one0)}}});
  f.push_back({"VII", {"VII"}, klingen(M1, PI), {}});
  f.push_back({"VIII", {"VIIIa", "VIIIb"}, klingen(ONE, PI), {}});
  f.push_back({"IX", {"IXa", "IXb"}, klingen(XI, PI), {}});
  f.push_back({"IX-t", {"IXa-t", "IXb-t"}, klingen(XI, PI), {}});
  f.push_back({"X", {"X"}, siegel(PI, M0), {}});
  f.push_back({"XI", {"XIa", "XIb"}, siegel(PI, M0), {}});
  return f;
}

std::vector<FingerprintSpec> build_fingerprints() {
  const std::vector<std::string> theta_refs = {"Ione⋊1", "St⋊1", "1⋊Ione", "1⋊St"};
  const std::vector<std::string> tau_refs = {"lambda0 St⋊1", "lambda0 Ione⋊lambda0"};
  return {
      {"theta0", P({1}), false, theta_refs, {true, false, true, false}, "theta0", false},
      {"theta1", P({0, 1, 2, 1}, 2), std::nullopt, theta_refs, {true, true, true, true}, "theta1", false},
      {"theta3", P({0, 1, 0, 1}, 2), std::nullopt, theta_refs, {true, false, false, true}, "theta2", false},
      {"theta4", P({0, 1, 0, 1}, 2), std::nullopt, theta_refs, {false, true, true, false}, "theta3", false},
      {"theta5", P({0, 0, 0, 0, 1}), true, theta_refs, {false, true, false, true}, "theta4", false},
      {"tau1", P({1, 0, 1}), std::nullopt, tau_refs, {false, true}, "", true},
      {"tau2", P({0, 1, 0, 1}), std::nullopt, tau_refs, {true, true}, "", true},
      {"tau3", P({0, 0, 1, 0, 1}), std::nullopt, tau_refs, {true, false}, "", true},
      {"tau4", P({-1, 0, 1}), std::nullopt, {"lambda0⋊pi"}, {true}, "", true},
      {"tau5", P({0, 0, -1, 0, 1}), std::nullopt, {"lambda0⋊pi"}, {true}, "", true},
      {"chi5", P({-1, 1, -1, 1}), std::nullopt, {"pi⋊1"}, {true}, "chi8", false},
      {"chi6", P({0, -1, 1, -1, 1}), std::nullopt, {"pi⋊1"}, {true}, "chi12", false},
      {"chi7", P({-1, 1, -1, 1}), std::nullopt, {"1⋊pi"}, {true}, "chi9", false},
      {"chi8", P({0, -1, 1, -1, 1}), std::nullopt, {"1⋊pi"}, {true}, "chi13", false},
  };
}

std::vector<GL2Row> build_gl2_rows() {
  return {
      {"principal", "mu1 x mu2", gl2_ps(M1, M2), {{M1, M2}, {M2, M1}}, false},
      {"one-dim", "mu1 Ione", gl2_one(M1), {{M1, M1}}, false},
      {"steinberg", "mu1 St", gl2_st(M1), {{M1, M1}}, false},
      {"cuspidal-depth0", "pi depth zero", gl2_cusp(), {}, true},
      {"positive-depth", "pi positive depth", std::nullopt, {}, false},
  };
}

}  // namespace

const FormalSum& RowSpec::column(ParahoricKind kind) const {
  switch (kind) {
    case ParahoricKind::K: return k;
    case ParahoricKind::J: return j;
    case ParahoricKind::B: return b;
    case ParahoricKind::P: return p;
    case ParahoricKind::Q: return q;
  }
  throw DomainError("unknown parahoric");
}

bool RowSpec::cuspidal_support() const {
  return std::find(params.begin(), params.end(), "Lambda") != params.end();
}

const std::vector<RowSpec>& rows() {
  static const std::vector<RowSpec> r = build_rows();
  return r;
}

const RowSpec& row(const std::string& id) {
  for (const auto& r : rows())
    if (r.id == id) return r;
  throw DomainError("unknown table row " + id);
}

const std::vector<Family>& families() {
  static const std::vector<Family> f = build_families();
  return f;
}

const std::vector<FingerprintSpec>& fingerprints() {
  static const std::vector<FingerprintSpec> f = build_fingerprints();
  return f;
}

const FingerprintSpec& fingerprint(const std::string& name) {
  for (const auto& f : fingerprints())
    if (f.name == name) return f;
  throw DomainError("unknown constituent " + name);
}

const std::vector<GL2Row>& gl2_rows() {
  static const std::vector<GL2Row> r = build_gl2_rows();
  return r;
}

const GL2Row& gl2_expected(const std::string& kind) {
  for (const auto& r : gl2_rows())
    if (r.kind == kind) return r;
  throw DomainError("unknown GL(2) representation kind " + kind);
}

// ---------------------------------------------------------------- degrees

DimPoly degree(const GL2Expr& s) {
  switch (s.kind) {
    case GL2Expr::One: return P({1});
    case GL2Expr::St: return P({0, 1});
    case GL2Expr::PS: return P({1, 1});
    case GL2Expr::Cusp:
    case GL2Expr::CuspDual: return P({-1, 1});
  }
  return {};
}

DimPoly degree(const Term& t) {
  DimPoly d;
  switch (t.kind) {
    case Term::LeviB: d = P({1}); break;
    case Term::LeviP:
    case Term::LeviQ: d = degree(t.s1); break;
    case Term::ABC: d = t.abc == 'A' ? P({4}) : P({2, 2}); break;
    case Term::Borel: d = P({1, 2, 2, 2, 1}); break;
    case Term::Siegel:
    case Term::Klingen: d = P({1, 1, 1, 1}) * degree(t.s1); break;
    case Term::Pair:
      d = degree(t.s1) * degree(t.s2);
      if (t.half) d = d.scaled(1, 2);
      break;
    case Term::Named: d = fingerprint(t.name).degree; break;
  }
  return d.scaled(t.mult);
}

DimPoly degree(const FormalSum& s) {
  DimPoly d;
  for (const auto& t : s.terms) d = d + degree(t);
  return d;
}

// ---------------------------------------------------------------- expansions

FormalSum expand_abc(const Term& t) {
  if (t.kind != Term::ABC) return FormalSum{{t}};
  const auto& [a1, a2, a0] = t.c;
  FormalSum s;
  if (t.abc == 'A')
    s = S({levi_b(a1, a2, a0), levi_b(a1, a2.inverse(), a2 * a0), levi_b(a1.inverse(), a2, a1 * a0),
           levi_b(a1.inverse(), a2.inverse(), a1 * a2 * a0)});
  else if (t.abc == 'B')
    s = S({levi_q(a1, gsp2_ps(a2, a0)), levi_q(a1.inverse(), gsp2_ps(a2, a1 * a0))});
  else if (t.abc == 'C')
    s = S({levi_p(gl2_ps(a1, a2), a0), levi_p(gl2_ps(a1.inverse(), a2), a1 * a0)});
  else
    throw DomainError(std::string("unknown sum ") + t.abc);
  for (auto& x : s.terms) x.mult *= t.mult;
  return s;
}

FormalSum expand_abc(const FormalSum& f) {
  FormalSum s;
  for (const auto& t : f.terms)
    for (auto& x : expand_abc(t).terms) s.terms.push_back(x);
  return s;
}

FormalSum paramodular_restriction(const Term& t) {
  const auto& [c1, c2, c0] = t.c;
  FormalSum s;
  switch (t.kind) {
    case Term::Borel: return paramodular_restriction(siegel(gl2_ps(c1, c2), c0));
    case Term::Siegel:
      switch (t.s1.kind) {
        case GL2Expr::PS:
          s = S({pair(gl2_ps(ONE, t.s1.a), gl2_ps(ONE, t.s1.b), c1), pair(gl2_ps(ONE, t.s1.b), gl2_ps(ONE, t.s1.a), c1)});
          break;
        case GL2Expr::One:
        case GL2Expr::St: s = S({pair(gl2_ps(ONE, t.s1.a), gl2_ps(ONE, t.s1.a), c1)}); break;
        default: break;
      }
      break;
    case Term::Klingen: s = S({pair(gl2_ps(ONE, c1), t.s1), pair(t.s1, gl2_ps(ONE, c1))}); break;
    default: throw DomainError(t.to_string() + " is not an induced representation of GSp(4,q)");
  }
  for (auto& x : s.terms) x.mult *= t.mult;
  return s;
}

// ---------------------------------------------------------------- trivial multiplicities

namespace {

// With all unramified characters trivial, a character expression is trivial
// unless it involves lambda0 to an odd power or Lambda.
bool trivial_unramified(const CharExpr& c) { return c.e[CharExpr::Lam0] % 2 == 0 && c.e[CharExpr::LamRes] == 0; }

std::int64_t trivial_in(const GL2Expr& s) {
  switch (s.kind) {
    case GL2Expr::One: return trivial_unramified(s.a);
    case GL2Expr::PS: return trivial_unramified(s.a) && trivial_unramified(s.b);
    default: return 0;
  }
}

std::int64_t trivial_in(const Term& t) {
  const auto& [a1, a2, a0] = t.c;
  std::int64_t m = 0;
  switch (t.kind) {
    case Term::LeviB:
    case Term::Borel: m = trivial_unramified(a1) && trivial_unramified(a2) && trivial_unramified(a0); break;
    case Term::LeviP:
    case Term::LeviQ:
    case Term::Siegel:
    case Term::Klingen: m = trivial_unramified(a1) ? trivial_in(t.s1) : 0; break;
    case Term::ABC: return trivial_multiplicity(expand_abc(t));
    case Term::Pair:
      if (t.half) throw DomainError("trivial multiplicity of a half pair is not tabulated");
      m = trivial_unramified(t.twist) ? trivial_in(t.s1) * trivial_in(t.s2) : 0;
      break;
    case Term::Named: m = t.name == "theta0" && trivial_unramified(t.twist); break;
  }
  return m * t.mult;
}

}  // namespace

std::int64_t trivial_multiplicity(const FormalSum& s) {
  std::int64_t m = 0;
  for (const auto& t : s.terms) m += trivial_in(t);
  return m;
}

// ---------------------------------------------------------------- parameters

std::string Params::to_string(const std::vector<std::string>& names) const {
  std::vector<std::string> parts;
  for (const auto& n : names) {
    if (n == "mu0") parts.push_back("mu0=" + std::to_string(mu0));
    else if (n == "mu1") parts.push_back("mu1=" + std::to_string(mu1));
    else if (n == "mu2") parts.push_back("mu2=" + std::to_string(mu2));
    else if (n == "Lambda") parts.push_back("Lambda=" + std::to_string(lambda));
  }
  if (tame) parts.push_back("xi=lambda0");
  if (wild) parts.push_back("wild");
  if (parts.empty()) return "trivial";
  std::string s;
  for (const auto& x : parts) s += (s.empty() ? "" : " ") + x;
  return s;
}

std::vector<std::int64_t> lambda_representatives(unsigned q, const std::string& rule) {
  const std::int64_t n = std::int64_t{q} * q - 1;
  std::vector<std::int64_t> reps;
  for (std::int64_t l = 1; l < n; ++l) {
    const std::int64_t f = l * q % n;
    if (f == l || f < l) continue;  // not in general position, or not the orbit minimum
    if (rule == "res1" && l % (q - 1) != 0) continue;
    if (rule == "lam0") {
      if (q % 2 == 0) continue;
      if (l % (q + 1) != (q + 1) / 2) continue;
    }
    reps.push_back(l);
  }
  return reps;
}

bool instantiable(const RowSpec& r, unsigned q) { return !(r.tame() && q % 2 == 0) && !instances(r, q).empty(); }

std::vector<Params> instances(const RowSpec& r, unsigned q) {
  if (r.tame() && q % 2 == 0) return {};
  auto has = [&](const char* s) { return std::find(r.params.begin(), r.params.end(), s) != r.params.end(); };
  const std::int64_t n = q - 1;
  std::vector<std::int64_t> lams = has("Lambda") ? lambda_representatives(q, r.lambda_rule) : std::vector<std::int64_t>{1};
  std::vector<Params> out;
  for (std::int64_t m0 = 0; m0 < (has("mu0") ? n : 1); ++m0)
    for (std::int64_t m1 = 0; m1 < (has("mu1") ? n : 1); ++m1)
      for (std::int64_t m2 = 0; m2 < (has("mu2") ? n : 1); ++m2)
        for (std::int64_t l : lams) {
          Params p;
          p.mu0 = m0;
          p.mu1 = m1;
          p.mu2 = m2;
          p.lambda = l;
          p.tame = r.tame();
          out.push_back(p);
        }
  return out;
}

// ---------------------------------------------------------------- resolution

MultChar Resolver::character(const CharExpr& c, const Params& p) const {
  const Env& E = env_;
  MultChar r = E.one();
  r = r * E.chi(p.mu0).pow(c.e[CharExpr::Mu0]);
  r = r * E.chi(p.mu1).pow(c.e[CharExpr::Mu1]);
  r = r * E.chi(p.mu2).pow(c.e[CharExpr::Mu2]);
  const int lam_power = c.e[CharExpr::Lam0] + (p.tame ? c.e[CharExpr::Xi] : 0);
  if (lam_power % 2) {
    auto l0 = E.lambda0();
    if (!l0) throw DomainError("lambda0 does not exist for even q");
    r = r * *l0;
  }
  if (c.e[CharExpr::LamRes]) r = r * E.restrict(lambda(p)).pow(c.e[CharExpr::LamRes]);
  return r;
}

ClassFunction Resolver::gl2(const GL2Expr& s, const Params& p) const {
  const Env& E = env_;
  switch (s.kind) {
    case GL2Expr::One: return E.gl2_one(character(s.a, p));
    case GL2Expr::St: return E.gl2_st(character(s.a, p));
    case GL2Expr::PS: return E.gl2_ps(character(s.a, p), character(s.b, p));
    case GL2Expr::Cusp: return E.gl2_cusp(lambda(p)) * E.gl2_one(character(s.a, p));
    case GL2Expr::CuspDual: return E.gl2_cusp(lambda(p)).dual() * E.gl2_one(character(s.a, p));
  }
  throw DomainError("unknown GL(2) expression");
}

ClassFunction Resolver::term(const Term& t, ParahoricKind k, const Params& p) const {
  const Env& E = env_;
  auto need = [&](ParahoricKind want) {
    if (k != want) throw DomainError(t.to_string() + " is not a representation of the " + to_string(k) + " Levi");
  };
  auto ch = [&](int i) { return character(t.c[i], p); };
  ClassFunction f;
  switch (t.kind) {
    case Term::LeviB: need(ParahoricKind::B); f = E.levi_b(ch(0), ch(1), ch(2)); break;
    case Term::LeviP: need(ParahoricKind::P); f = E.levi_p(gl2(t.s1, p), ch(0)); break;
    case Term::LeviQ: need(ParahoricKind::Q); f = E.levi_q(ch(0), gl2(t.s1, p)); break;
    case Term::ABC:
      need(t.abc == 'A' ? ParahoricKind::B : t.abc == 'B' ? ParahoricKind::Q : ParahoricKind::P);
      f = E.abc(t.abc, ch(0), ch(1), ch(2));
      break;
    case Term::Borel: need(ParahoricKind::K); f = E.borel(ch(0), ch(1), ch(2)); break;
    case Term::Siegel: need(ParahoricKind::K); f = E.siegel(gl2(t.s1, p), ch(0)); break;
    case Term::Klingen: need(ParahoricKind::K); f = E.klingen(ch(0), gl2(t.s1, p)); break;
    case Term::Pair: {
      need(ParahoricKind::J);
      f = E.twist(ParahoricKind::J, character(t.twist, p), E.pair(gl2(t.s1, p), gl2(t.s2, p)));
      if (t.half) {
        auto s = E.split(f);
        f = t.half > 0 ? s.generic : s.nongeneric;
      }
      break;
    }
    case Term::Named:
      need(ParahoricKind::K);
      f = E.twist(ParahoricKind::K, character(t.twist, p), named(t.name, p));
      break;
  }
  return t.mult == 1 ? f : f.scaled(t.mult);
}

ClassFunction Resolver::sum(const FormalSum& s, ParahoricKind k, const Params& p) const {
  ClassFunction f(env_.group(k), env_.mod());
  if (p.wild) return f;
  for (const auto& t : s.terms) f += term(t, k, p);
  return f;
}

ClassFunction Resolver::reference(const std::string& name, const Params& p) const {
  const Env& E = env_;
  const MultChar one = E.one();
  auto l0 = [&] {
    auto l = E.lambda0();
    if (!l) throw DomainError("reference " + name + " needs odd q");
    return *l;
  };
  if (name == "Ione⋊1") return E.siegel(E.gl2_one(one), one);
  if (name == "St⋊1") return E.siegel(E.gl2_st(one), one);
  if (name == "1⋊Ione") return E.klingen(one, E.gl2_one(one));
  if (name == "1⋊St") return E.klingen(one, E.gl2_st(one));
  if (name == "lambda0 St⋊1") return E.siegel(E.gl2_st(l0()), one);
  if (name == "lambda0 Ione⋊lambda0") return E.siegel(E.gl2_one(l0()), l0());
  if (name == "1⋊pi") return E.klingen(one, E.gl2_cusp(lambda(p)));
  if (name == "pi⋊1") return E.siegel(E.gl2_cusp(lambda(p)), one);
  if (name == "lambda0⋊pi") return E.klingen(l0(), E.gl2_cusp(lambda(p)));
  throw DomainError("unknown reference induction " + name);
}

ClassFunction Resolver::named(const std::string& name, const Params& p) const {
  const FingerprintSpec& fp = fingerprint(name);
  const bool uses_lambda = fp.references.size() == 1;
  const std::string key = uses_lambda ? name + "/" + std::to_string(p.lambda) : name;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const Env& E = env_;
  if (fp.odd_only && E.q() % 2 == 0) throw DomainError(name + " exists for odd q only");
  if (uses_lambda) {
    const MultChar lam = lambda(p);
    if (!lam.is_general_position()) throw DomainError(name + " needs Lambda in general position");
    if (name == "chi5" || name == "chi6") {
      if (!E.restrict(lam).is_trivial()) throw DomainError(name + " needs Lambda| = 1");
    }
    if (name == "tau4" || name == "tau5") {
      const std::int64_t n = E.ext()->units();
      if (static_cast<std::int64_t>(lam.exponent()) * (E.q() - 1) % n != n / 2)
        throw DomainError(name + " needs Lambda^(q-1) = Lambda0");
    }
  }
  const auto& T = E.table(ParahoricKind::K);
  std::vector<std::vector<std::int64_t>> mult;
  for (const auto& r : fp.references) mult.push_back(T.decompose_character(reference(r, p)));
  const std::int64_t deg = fp.degree.eval(E.q());
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < T.size(); ++i) {
    bool ok = T.degrees[i] == deg;
    for (std::size_t r = 0; ok && r < mult.size(); ++r) ok = (mult[r][i] > 0) == fp.pattern[r];
    if (ok) hits.push_back(i);
  }
  if (hits.size() != 1)
    throw ComputationError("fingerprint of " + name + " matches " + std::to_string(hits.size()) +
                           " irreducibles at q=" + std::to_string(E.q()));
  const ClassFunction& chi = T.irr[hits[0]];
  if (fp.generic && (E.whittaker(chi) == 1) != *fp.generic)
    throw ComputationError("genericity of " + name + " disagrees with its fingerprint");
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(key, chi);
  return chi;
}

// ---------------------------------------------------------------- dump

std::string dump_tables() {
  std::ostringstream os;
  auto sph = [](const std::array<int, 5>& s) {
    std::string r;
    for (int v : s) r += (r.empty() ? "" : " ") + std::to_string(v);
    return r;
  };
  os << "# Parahoric restriction of non-cuspidal representations of GSp(4,F)\n";
  for (const auto& r : rows()) {
    os << r.id << "  " << r.rho << "  [family " << r.family << "; parameters";
    for (const auto& s : r.params) os << " " << s;
    if (!r.lambda_rule.empty()) os << "; Lambda rule " << r.lambda_rule;
    os << "]\n";
    os << "  K: " << r.k.to_string() << "   dim " << r.dim_k.to_string() << "   central " << r.central.to_string()
       << "\n";
    os << "  K (even q): " << r.enomoto << "\n";
    os << "  B: " << r.b.to_string() << "\n";
    os << "  Q: " << r.q.to_string() << "\n";
    os << "  P: " << r.p.to_string() << "\n";
    os << "  J: " << r.j.to_string() << "   dim " << r.dim_j.to_string() << "\n";
    os << "  parent: " << r.parent.to_string() << "\n";
    if (r.spherical) os << "  spherical K J P Q B: " << sph(*r.spherical) << "\n";
  }
  os << "\n# GL(2)\n";
  for (const auto& g : gl2_rows()) {
    os << g.kind << "  " << g.rho << "\n  K: "
       << (g.cuspidal_k ? "cuspidal irreducible" : g.k ? g.k->to_string() : std::string("0")) << "\n  B: ";
    if (g.b.empty()) os << "0";
    for (std::size_t i = 0; i < g.b.size(); ++i)
      os << (i ? " + " : "") << g.b[i].first.to_string() << " ⊠ " << g.b[i].second.to_string();
    os << "\n";
  }
  os << "\n# Named constituents\n";
  for (const auto& f : fingerprints()) {
    os << f.name << "  degree " << f.degree.to_string() << "  in";
    for (std::size_t i = 0; i < f.references.size(); ++i)
      os << " " << (f.pattern[i] ? "" : "!") << f.references[i];
    if (f.generic) os << "  " << (*f.generic ? "generic" : "non-generic");
    if (!f.even_alias.empty()) os << "  even q: " << f.even_alias;
    if (f.odd_only) os << "  odd q only";
    os << "\n";
  }
  return os.str();
}

}  // namespace phr
