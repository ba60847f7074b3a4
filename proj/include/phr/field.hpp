#pragma once

// Finite fields GF(p) and GF(p^2) with discrete-log tables, and the
// multiplicative/additive characters built on them.
//
// Elements are encoded as small integers 0..q-1.  For k = 2 the element
// a + b*t (t a root of the fixed irreducible quadratic) is encoded a + b*p, so
// the prime subfield is exactly the codes 0..p-1 and agrees with GF(p).
// Character values are never stored as numbers: a multiplicative character
// value is an exponent of a primitive (q-1)-th root of unity and an additive
// character value is an exponent of a primitive p-th root of unity.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace phr {

using Elem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr unsigned kDefaultBound = 25;

  // Throws DomainError for composite p, k outside {1,2}, or p^k > bound.
  static FieldPtr build(unsigned p, unsigned k, unsigned bound = kDefaultBound);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned order() const { return q_; }
  unsigned units() const { return q_ - 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  Elem generator() const { return gen_; }
  // Exponent of the generator, for nonzero x.
  unsigned log(Elem x) const;
  Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  unsigned element_order(Elem x) const;

  // Absolute trace to the prime field, returned as a residue mod p.
  unsigned trace(Elem x) const;
  // x^(p+1) for k = 2; the identity for k = 1.
  Elem norm(Elem x) const;
  // x^p (Frobenius).
  Elem frobenius(Elem x) const { return pow(x, p_); }
  bool in_prime_field(Elem x) const { return x < p_; }

  // Coefficients (c0, c1) of the modulus t^2 = c0 + c1 t used for k = 2.
  std::pair<Elem, Elem> modulus() const { return {c0_, c1_}; }
  std::string to_string(Elem x) const;
  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero() const;

 private:
  Field() = default;
  void build_tables();

  unsigned p_ = 0, k_ = 0, q_ = 0;
  Elem c0_ = 0, c1_ = 0;
  Elem gen_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<Elem> exp_;
  std::vector<unsigned> log_;
};

bool is_prime(std::uint64_t n);

// x -> zeta_{q-1}^(exponent * log_g x).  `exponent` is reduced mod q-1.
class MultChar {
 public:
  MultChar(FieldPtr field, std::int64_t exponent);
  static MultChar trivial(FieldPtr field) { return MultChar(std::move(field), 0); }
  // The nontrivial quadratic character; odd q only.
  static MultChar quadratic(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  unsigned exponent() const { return e_; }
  unsigned modulus() const { return field_->units(); }
  bool is_trivial() const { return e_ == 0; }
  unsigned order() const;

  // Value at nonzero x as an exponent of zeta_{q-1}.
  unsigned eval(Elem x) const;

  MultChar operator*(const MultChar& o) const;
  MultChar inverse() const;
  MultChar pow(std::int64_t n) const;
  bool operator==(const MultChar& o) const;

  // GF(q^2) characters over their prime field GF(q).
  MultChar restrict_to_base(FieldPtr base) const;
  MultChar frobenius() const;  // Lambda^q
  bool is_general_position() const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  unsigned e_ = 0;
};

// mu o Norm : GF(q^2)^x -> roots of unity, for mu a character of GF(q)^x.
MultChar compose_with_norm(const MultChar& base_char, FieldPtr extension);

// x -> zeta_p^(Tr(a x)).
class AdditiveChar {
 public:
  AdditiveChar(FieldPtr field, Elem scale = 1);
  unsigned eval(Elem x) const;  // exponent of zeta_p
  const FieldPtr& field() const { return field_; }
  bool is_nontrivial() const;

 private:
  FieldPtr field_;
  Elem scale_;
};

}  // namespace phr
