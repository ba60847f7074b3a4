#include "phr/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "phr/error.hpp"

namespace phr {

namespace {

using Vec = std::vector<std::uint32_t>;
using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const Modulus& m) {
  trim(a);
  const std::uint32_t lead_inv = m.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint32_t c = m.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = m.sub(a[shift + i], m.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b, const Modulus& m) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = m.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint32_t c = m.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = m.sub(a[shift + i], m.mul(c, b[i]));
    trim(a);
  }
  return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const Modulus& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
  return poly_mod(std::move(r), f, m);
}

Poly poly_gcd(Poly a, Poly b, const Modulus& m) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t s = m.inv(a.back());
    for (auto& c : a) c = m.mul(c, s);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, const Modulus& m) {
  Poly r{1};
  base = poly_mod(std::move(base), f, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, m);
    base = poly_mulmod(base, base, f, m);
    e >>= 1;
  }
  return r;
}

// Roots of a monic squarefree polynomial that splits into linear factors.
void split_roots(const Poly& g, const Modulus& m, std::vector<std::uint32_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(m.neg(m.mul(g[0], m.inv(g[1]))));
    return;
  }
  for (std::uint32_t a = 0; a < m.ell; ++a) {
    Poly h = poly_powmod(Poly{a, 1}, (m.ell - 1) / 2, g, m);
    if (h.empty()) h = Poly{0};
    h[0] = m.sub(h[0], 1);
    Poly d = poly_gcd(g, h, m);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, m, out);
      split_roots(poly_div(g, d, m), m, out);
      return;
    }
  }
  throw ComputationError("root splitting did not terminate");
}

std::vector<std::uint32_t> distinct_roots(const Poly& f, const Modulus& m) {
  // gcd(f, x^l - x) keeps each root once.
  Poly xl = poly_powmod(Poly{0, 1}, m.ell, f, m);
  xl.resize(std::max<std::size_t>(xl.size(), 2), 0);
  xl[1] = m.sub(xl[1], 1);
  trim(xl);
  Poly g = xl.empty() ? f : poly_gcd(f, xl, m);
  std::vector<std::uint32_t> roots;
  split_roots(g, m, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

using Matrix = std::vector<Vec>;

Poly char_poly(Matrix a, const Modulus& m) {
  const std::size_t n = a.size();
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      for (auto& row : a) std::swap(row[piv], row[c]);
    }
    const std::uint32_t inv = m.inv(a[c][c - 1]);
    for (std::size_t j = c + 1; j < n; ++j) {
      const std::uint32_t u = m.mul(a[j][c - 1], inv);
      if (!u) continue;
      for (std::size_t k = 0; k < n; ++k) a[j][k] = m.sub(a[j][k], m.mul(u, a[c][k]));
      for (std::size_t k = 0; k < n; ++k) a[k][c] = m.add(a[k][c], m.mul(u, a[k][j]));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly r(k + 1, 0);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      r[i + 1] = m.add(r[i + 1], p[k - 1][i]);
      r[i] = m.sub(r[i], m.mul(a[k - 1][k - 1], p[k - 1][i]));
    }
    std::uint32_t t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = m.mul(t, a[k - i][k - i - 1]);
      const std::uint32_t c = m.mul(t, a[k - i - 1][k - 1]);
      if (!c) continue;
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) r[j] = m.sub(r[j], m.mul(c, p[k - i - 1][j]));
    }
    p[k] = std::move(r);
  }
  return p[n];
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& rows, const Modulus& m) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint32_t s = m.inv(rows[r][c]);
    for (auto& v : rows[r]) v = m.mul(v, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t t = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = m.sub(rows[i][k], m.mul(t, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of the kernel of the square matrix `a` (as row vectors).
Matrix kernel(Matrix a, const Modulus& m) {
  const std::size_t n = a.size();
  auto piv = rref(a, m);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Matrix ker;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = m.neg(a[r][free]);
    ker.push_back(std::move(v));
  }
  return ker;
}

struct Subspace {
  Matrix basis;  // rows, in reduced echelon form
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(Matrix rows, const Modulus& m) {
  Subspace s;
  s.pivots = rref(rows, m);
  s.basis = std::move(rows);
  return s;
}

}  // namespace

CharacterTable dixon_table(const GroupPtr& g, const Modulus& m) {
  const auto& cc = g->classes();
  const std::size_t k = cc.count();
  const std::uint64_t order = g->order();
  if (m.e % g->exponent() != 0) throw DomainError("modulus exponent is not a multiple of the group exponent");
  if (m.ell <= 2 * order) throw DomainError("modulus must exceed twice the group order");

  std::vector<std::vector<Id>> members(k);
  for (Id x = 0; x < order; ++x) members[cc.class_of[x]].push_back(x);
  std::vector<Mat> reps;
  for (Id r : cc.reps) reps.push_back(g->element(r));
  const Field& f = *g->field();

  std::map<std::size_t, Matrix> cache;
  auto class_matrix = [&](std::size_t j) -> const Matrix& {
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    Matrix mj(k, Vec(k, 0));
    for (Id w : members[cc.inverse[j]]) {
      const Mat mw = g->element(w);
      for (std::size_t c = 0; c < k; ++c) {
        Id prod = g->find(mul(f, mw, reps[c]));
        std::size_t l = cc.class_of[prod];
        mj[l][c] = m.add(mj[l][c], 1);
      }
    }
    return cache.emplace(j, std::move(mj)).first->second;
  };

  Matrix full(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
  std::vector<Subspace> pending;
  std::vector<Vec> done;
  if (k == 1)
    done.push_back(full[0]);
  else
    pending.push_back(make_subspace(full, m));
  for (std::size_t j = 1; j < k && !pending.empty(); ++j) {
    std::vector<Subspace> next;
    for (auto& sp : pending) {
      const std::size_t d = sp.basis.size();
      const Matrix& mj = class_matrix(j);
      // Restricted matrix: column i holds the coordinates of M_j b_i.
      Matrix b(d, Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        Vec img(k, 0);
        for (std::size_t r = 0; r < k; ++r) {
          std::uint64_t s = 0;
          for (std::size_t c = 0; c < k; ++c) s += std::uint64_t{mj[r][c]} * sp.basis[i][c] % m.ell;
          img[r] = static_cast<std::uint32_t>(s % m.ell);
        }
        for (std::size_t r = 0; r < d; ++r) b[r][i] = img[sp.pivots[r]];
      }
      auto roots = distinct_roots(char_poly(b, m), m);
      if (roots.size() <= 1) {
        next.push_back(std::move(sp));
        continue;
      }
      std::size_t total = 0;
      for (std::uint32_t lam : roots) {
        Matrix shifted = b;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = m.sub(shifted[i][i], lam);
        Matrix ker = kernel(shifted, m);
        total += ker.size();
        Matrix vecs;
        for (const Vec& y : ker) {
          Vec v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (y[i])
              for (std::size_t c = 0; c < k; ++c) v[c] = m.add(v[c], m.mul(y[i], sp.basis[i][c]));
          vecs.push_back(std::move(v));
        }
        next.push_back(make_subspace(std::move(vecs), m));
      }
      if (total != d) throw ComputationError("class matrix is not diagonalizable on a common eigenspace; try another modulus");
    }
    pending.clear();
    for (auto& sp : next) {
      if (sp.basis.size() == 1)
        done.push_back(sp.basis[0]);
      else
        pending.push_back(std::move(sp));
    }
  }
  if (!pending.empty()) throw ComputationError("common eigenspaces did not split; try another modulus");

  CharacterTable t;
  t.group = g;
  t.mod = m;
  std::vector<std::uint32_t> size_inv(k);
  for (std::size_t c = 0; c < k; ++c) size_inv[c] = m.inv(m.from_int(static_cast<std::int64_t>(cc.sizes[c] % m.ell)));
  for (Vec& v : done) {
    if (v[0] == 0) throw ComputationError("eigenvector vanishes at the identity class");
    const std::uint32_t s = m.inv(v[0]);
    for (auto& x : v) x = m.mul(x, s);
    std::uint32_t sum = 0;
    for (std::size_t c = 0; c < k; ++c) sum = m.add(sum, m.mul(m.mul(v[c], v[cc.inverse[c]]), size_inv[c]));
    const std::uint32_t d2 = m.mul(m.from_int(static_cast<std::int64_t>(order % m.ell)), m.inv(sum));
    const std::uint64_t d = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(d2))));
    if (d * d != d2 || d == 0 || order % d != 0)
      throw ComputationError("degree recovery failed (d^2 = " + std::to_string(d2) + " mod l)");
    Vec vals(k);
    for (std::size_t c = 0; c < k; ++c)
      vals[c] = m.mul(m.mul(m.from_int(static_cast<std::int64_t>(d)), v[c]), size_inv[c]);
    t.irr.push_back(ClassFunction::from_values(g, m, std::move(vals)));
  }
  std::sort(t.irr.begin(), t.irr.end(), [](const ClassFunction& a, const ClassFunction& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.values() < b.values();
  });
  for (const auto& chi : t.irr) t.degrees.push_back(chi.degree());
  return t;
}

std::vector<std::int64_t> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<std::int64_t> mult;
  for (const auto& chi : irr) mult.push_back(inner_product(f, chi));
  if (compose(mult) != f) throw ComputationError("decomposition does not reproduce the function");
  return mult;
}

std::vector<std::int64_t> CharacterTable::decompose_character(const ClassFunction& f) const {
  auto mult = decompose(f);
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0) throw ComputationError("negative multiplicity: input is not a character");
    deg += mult[i] * degrees[i];
  }
  if (deg != f.degree()) throw ComputationError("multiplicities do not add up to the degree");
  return mult;
}

ClassFunction CharacterTable::compose(const std::vector<std::int64_t>& mult) const {
  ClassFunction r(group, mod);
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) r += irr[i].scaled(mult[i]);
  return r;
}

long CharacterTable::index_of(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irr.size(); ++i)
    if (irr[i] == f) return static_cast<long>(i);
  return -1;
}

std::vector<std::pair<Id, std::uint32_t>> central_character(const ClassFunction& chi) {
  if (inner_product(chi, chi) != 1) throw DomainError("central character requested for a non-irreducible function");
  const auto& cc = chi.group()->classes();
  const Modulus& m = chi.modulus();
  const std::uint32_t dinv = m.inv(chi[0]);
  std::vector<std::pair<Id, std::uint32_t>> out;
  for (std::size_t c = 0; c < cc.count(); ++c)
    if (cc.sizes[c] == 1) out.emplace_back(static_cast<Id>(c), m.mul(chi[c], dinv));
  return out;
}

ClassFunction induce_from_subgroup(const Subgroup& h, const Modulus& m, const std::vector<std::uint32_t>& per_element) {
  const GroupPtr& g = h.parent;
  const auto& cc = g->classes();
  if (per_element.size() != h.group->order()) throw DomainError("induction input has wrong length");
  std::vector<std::uint32_t> sums(cc.count(), 0);
  for (Id i = 0; i < per_element.size(); ++i) {
    Id c = cc.class_of[h.to_parent[i]];
    sums[c] = m.add(sums[c], per_element[i]);
  }
  // Ind(c) = |G| / (|H| |C|) * sum_{h in H cap C} phi(h) = |C_G(x)| / |H| * sum.
  const std::uint32_t hinv = m.inv(m.from_int(static_cast<std::int64_t>(h.group->order() % m.ell)));
  std::vector<std::uint32_t> vals(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c)
    vals[c] = m.mul(m.mul(sums[c], m.from_int(static_cast<std::int64_t>(cc.centralizer[c] % m.ell))), hinv);
  return ClassFunction::from_values(g, m, std::move(vals));
}

std::vector<std::uint32_t> restrict_to_subgroup(const Subgroup& h, const ClassFunction& f) {
  std::vector<std::uint32_t> out(h.group->order());
  for (Id i = 0; i < out.size(); ++i) out[i] = f.at(h.to_parent[i]);
  return out;
}

void check_linear_character(const Subgroup& h, const Modulus& m, const std::vector<std::uint32_t>& v) {
  const auto& grp = *h.group;
  if (v.size() != grp.order() || v[0] != 1) throw DomainError("linear character must be 1 at the identity");
  for (Id x = 0; x < grp.order(); ++x)
    for (Id y = 0; y < grp.order(); ++y)
      if (v[grp.mul(x, y)] != m.mul(v[x], v[y])) throw DomainError("function is not a homomorphism on " + grp.name());
}

std::int64_t whittaker_multiplicity(const ClassFunction& gelfand_graev, const ClassFunction& chi) {
  return inner_product(chi, gelfand_graev);
}

std::uint32_t mult_char_value(const Modulus& m, const MultChar& chi, Elem x) {
  return m.zeta(chi.modulus(), chi.eval(x));
}

std::uint32_t add_char_value(const Modulus& m, const AdditiveChar& psi, Elem x) {
  return m.zeta(psi.field()->characteristic(), psi.eval(x));
}

}  // namespace phr
