#include "phr/modular.hpp"

#include <vector>

#include "phr/error.hpp"
#include "phr/field.hpp"
#include "phr/group.hpp"

namespace phr {

std::uint32_t Modulus::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = 1 % ell, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::uint32_t Modulus::inv(std::uint32_t a) const {
  if (a % ell == 0) throw DomainError("inverse of zero mod " + std::to_string(ell));
  return pow(a, ell - 2);
}

std::uint32_t Modulus::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(ell);
  if (r < 0) r += ell;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Modulus::zeta(std::uint64_t n, std::int64_t k) const {
  if (n == 0 || e % n != 0)
    throw DomainError("root of unity of order " + std::to_string(n) + " not available mod " + std::to_string(ell));
  std::int64_t kk = k % static_cast<std::int64_t>(n);
  if (kk < 0) kk += static_cast<std::int64_t>(n);
  return pow(z, (e / n) * static_cast<std::uint64_t>(kk));
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

Modulus make_modulus(std::uint64_t e, std::uint64_t bound) {
  if (e == 0) throw DomainError("exponent must be positive");
  std::uint64_t ell = (bound / e) * e + 1;
  while (ell <= bound || !is_prime(ell)) ell += e;
  if (ell >= (1ULL << 31)) throw DomainError("modulus does not fit in 31 bits");
  Modulus m;
  m.ell = static_cast<std::uint32_t>(ell);
  m.e = e;
  const auto factors = prime_factors(ell - 1);
  for (std::uint32_t g = 2;; ++g) {
    bool primitive = true;
    for (std::uint64_t pf : factors)
      if (m.pow(g, (ell - 1) / pf) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      m.z = m.pow(g, (ell - 1) / e);
      break;
    }
  }
  return m;
}

Modulus pick_modulus(const Group& g) { return make_modulus(g.exponent(), 2 * g.order()); }

}  // namespace phr
