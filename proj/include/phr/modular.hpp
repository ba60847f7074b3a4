#pragma once

// Arithmetic in Z/l for a prime l = 1 mod e, with a fixed element z of exact
// order e standing in for exp(2 pi i / e).

#include <cstdint>

namespace phr {

class Group;

struct Modulus {
  std::uint32_t ell = 0;
  std::uint32_t z = 0;
  std::uint64_t e = 0;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= ell ? s - ell : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + ell - b; }
  std::uint32_t neg(std::uint32_t a) const { return a ? ell - a : 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % ell);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws DomainError on 0
  std::uint32_t from_int(std::int64_t v) const;
  // Representative in (-l/2, l/2].
  std::int64_t lift(std::uint32_t a) const { return a > ell / 2 ? std::int64_t{a} - ell : a; }
  // zeta_n^k; n must divide e.
  std::uint32_t zeta(std::uint64_t n, std::int64_t k) const;

  bool operator==(const Modulus& o) const { return ell == o.ell && z == o.z && e == o.e; }
};

// Smallest prime l = 1 mod e with l > bound, and z = g^((l-1)/e) for the
// smallest primitive root g.
Modulus make_modulus(std::uint64_t e, std::uint64_t bound);
// pick_modulus(G): e = exponent of G, bound = 2|G|.
Modulus pick_modulus(const Group& g);

}  // namespace phr
