#pragma once

// Small square matrices (n <= 4) over a finite field with q <= 16, packed
// into a 64-bit key with one nibble per entry (row-major).

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "phr/field.hpp"

namespace phr {

using Key = std::uint64_t;

struct Mat {
  unsigned n = 0;
  std::array<Elem, 16> a{};

  Mat() = default;
  explicit Mat(unsigned dim) : n(dim) {}
  Mat(unsigned dim, std::initializer_list<unsigned> rows);

  Elem& operator()(unsigned r, unsigned c) { return a[r * n + c]; }
  Elem operator()(unsigned r, unsigned c) const { return a[r * n + c]; }
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }

  static Mat identity(unsigned dim);
  static Mat scalar(unsigned dim, Elem c);
  static Mat diag(std::initializer_list<Elem> d);
};

Key encode(const Mat& m);
Mat decode(Key k, unsigned n);

Mat mul(const Field& f, const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Elem det(const Field& f, const Mat& m);
// Throws DomainError for singular input.
Mat inverse(const Field& f, const Mat& m);
Mat block_diag(const Mat& x, const Mat& y);
// Rows/columns [r0, r0+k) x [c0, c0+k) as a k x k matrix.
Mat submatrix(const Mat& m, std::initializer_list<unsigned> rows, std::initializer_list<unsigned> cols);
std::string to_string(const Field& f, const Mat& m);

}  // namespace phr
