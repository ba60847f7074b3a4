#include "phr/field.hpp"

#include <numeric>
#include <sstream>

#include "phr/error.hpp"

namespace phr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Smallest monic irreducible t^2 - c1 t - c0 over GF(p): no root in GF(p).
std::pair<unsigned, unsigned> pick_quadratic_modulus(unsigned p) {
  for (unsigned c1 = 0; c1 < p; ++c1)
    for (unsigned c0 = 1; c0 < p; ++c0) {
      bool root = false;
      for (unsigned x = 0; x < p && !root; ++x)
        root = (x * x + p * p - c1 * x - c0) % p == 0;
      if (!root) return {c0, c1};
    }
  throw ComputationError("no irreducible quadratic found");
}

}  // namespace

FieldPtr Field::build(unsigned p, unsigned k, unsigned bound) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (k != 1 && k != 2) throw DomainError("extension degree must be 1 or 2");
  const unsigned q = k == 1 ? p : p * p;
  if (q > bound)
    throw DomainError("field order " + std::to_string(q) + " exceeds bound " + std::to_string(bound));
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = q;
  if (k == 2) {
    auto [c0, c1] = pick_quadratic_modulus(p);
    f->c0_ = static_cast<Elem>(c0);
    f->c1_ = static_cast<Elem>(c1);
  }
  f->build_tables();
  return f;
}

void Field::build_tables() {
  const unsigned q = q_, p = p_;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  auto split = [&](unsigned x) { return std::pair<unsigned, unsigned>{x % p, x / p}; };
  for (unsigned x = 0; x < q; ++x) {
    auto [a, b] = split(x);
    neg_[x] = static_cast<Elem>((p - a) % p + ((p - b) % p) * p);
    for (unsigned y = 0; y < q; ++y) {
      auto [c, d] = split(y);
      add_[x * q + y] = static_cast<Elem>((a + c) % p + ((b + d) % p) * p);
      // (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2, t^2 = c0 + c1 t
      unsigned r0 = (a * c + b * d * c0_) % p;
      unsigned r1 = (a * d + b * c + b * d * c1_) % p;
      mul_[x * q + y] = static_cast<Elem>(r0 + r1 * p);
    }
  }
  for (unsigned x = 1; x < q; ++x)
    for (unsigned y = 1; y < q; ++y)
      if (mul_[x * q + y] == 1) inv_[x] = static_cast<Elem>(y);

  auto order_of = [&](unsigned x) {
    unsigned o = 1;
    Elem y = static_cast<Elem>(x);
    while (y != 1) {
      y = mul_[y * q + x];
      ++o;
    }
    return o;
  };
  gen_ = 0;
  if (k_ == 1) {
    for (unsigned x = 1; x < q && gen_ == 0; ++x)
      if (order_of(x) == q - 1) gen_ = static_cast<Elem>(x);
  } else {
    // Generator of GF(p^2)^x whose norm is the generator of GF(p)^x.
    Elem base_gen = 0;
    for (unsigned x = 1; x < p && base_gen == 0; ++x) {
      unsigned o = 1;
      unsigned y = x;
      while (y != 1) {
        y = y * x % p;
        ++o;
      }
      if (o == p - 1) base_gen = static_cast<Elem>(x);
    }
    if (p == 2) base_gen = 1;
    for (unsigned x = 1; x < q && gen_ == 0; ++x) {
      if (order_of(x) != q - 1) continue;
      Elem n = 1;
      for (unsigned i = 0; i < p + 1; ++i) n = mul_[n * q + x];
      if (n == base_gen) gen_ = static_cast<Elem>(x);
    }
  }
  if (gen_ == 0) throw ComputationError("no admissible generator for GF(" + std::to_string(q) + ")");
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  Elem y = 1;
  for (unsigned e = 0; e < q - 1; ++e) {
    exp_[e] = y;
    log_[y] = e;
    y = mul_[y * q + gen_];
  }
  if (y != 1) throw ComputationError("generator order check failed");
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

unsigned Field::log(Elem x) const {
  if (x == 0 || x >= q_) throw DomainError("log of zero or out-of-range element");
  return log_[x];
}

unsigned Field::element_order(Elem x) const {
  const unsigned n = q_ - 1;
  return n / std::gcd(n, log(x));
}

unsigned Field::trace(Elem x) const {
  if (k_ == 1) return x;
  Elem t = add(x, frobenius(x));
  return t;  // lies in the prime field, so the code is the residue
}

Elem Field::norm(Elem x) const {
  if (k_ == 1) return x;
  return pow(x, p_ + 1);
}

std::string Field::to_string(Elem x) const {
  if (k_ == 1) return std::to_string(x);
  unsigned a = x % p_, b = x / p_;
  if (b == 0) return std::to_string(a);
  std::ostringstream os;
  if (a) os << a << "+";
  if (b != 1) os << b;
  os << "t";
  return os.str();
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> v(q_);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

std::vector<Elem> Field::nonzero() const {
  std::vector<Elem> v(q_ - 1);
  std::iota(v.begin(), v.end(), Elem{1});
  return v;
}

MultChar::MultChar(FieldPtr field, std::int64_t exponent) : field_(std::move(field)) {
  const std::int64_t n = field_->units();
  e_ = static_cast<unsigned>(((exponent % n) + n) % n);
}

MultChar MultChar::quadratic(FieldPtr field) {
  if (field->order() % 2 == 0) throw DomainError("no quadratic character for even q");
  const unsigned n = field->units();
  return MultChar(std::move(field), n / 2);
}

unsigned MultChar::order() const {
  const unsigned n = modulus();
  return n / std::gcd(n, e_);
}

unsigned MultChar::eval(Elem x) const {
  const std::uint64_t n = modulus();
  return static_cast<unsigned>((static_cast<std::uint64_t>(e_) * field_->log(x)) % n);
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (field_ != o.field_ && field_->order() != o.field_->order())
    throw DomainError("multiplying characters of different fields");
  return MultChar(field_, static_cast<std::int64_t>(e_) + o.e_);
}

MultChar MultChar::inverse() const { return MultChar(field_, -static_cast<std::int64_t>(e_)); }

MultChar MultChar::pow(std::int64_t n) const { return MultChar(field_, static_cast<std::int64_t>(e_) * n); }

bool MultChar::operator==(const MultChar& o) const {
  return field_->order() == o.field_->order() && e_ == o.e_;
}

MultChar MultChar::restrict_to_base(FieldPtr base) const {
  if (field_->degree() != 2) throw DomainError("restriction requires a quadratic extension field");
  if (base->order() != field_->characteristic())
    throw DomainError("base field does not match the extension");
  // base generator = norm(g) = g^(p+1), so Lambda(g0^a) = zeta_{p^2-1}^(l a (p+1)) = zeta_{p-1}^(l a)
  return MultChar(std::move(base), e_);
}

MultChar MultChar::frobenius() const {
  if (field_->degree() != 2) throw DomainError("frobenius twist requires a quadratic extension field");
  return MultChar(field_, static_cast<std::int64_t>(e_) * field_->characteristic());
}

bool MultChar::is_general_position() const {
  if (field_->degree() != 2) throw DomainError("general position is defined for GF(q^2) characters");
  return frobenius().e_ != e_;
}

std::string MultChar::to_string() const {
  return "chi[" + std::to_string(e_) + "/" + std::to_string(modulus()) + "]";
}

MultChar compose_with_norm(const MultChar& base_char, FieldPtr extension) {
  if (extension->degree() != 2 || extension->characteristic() != base_char.field()->order())
    throw DomainError("norm composition needs GF(q^2) over GF(q)");
  const std::int64_t p = extension->characteristic();
  return MultChar(std::move(extension), static_cast<std::int64_t>(base_char.exponent()) * (p + 1));
}

AdditiveChar::AdditiveChar(FieldPtr field, Elem scale) : field_(std::move(field)), scale_(scale) {
  if (scale_ == 0) throw DomainError("additive character scale must be nonzero");
}

unsigned AdditiveChar::eval(Elem x) const { return field_->trace(field_->mul(scale_, x)); }

bool AdditiveChar::is_nontrivial() const {
  for (Elem x : field_->elements())
    if (eval(x) != 0) return true;
  return false;
}

}  // namespace phr
