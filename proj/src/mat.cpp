#include "phr/mat.hpp"

#include <sstream>
#include <vector>

#include "phr/error.hpp"

namespace phr {

Mat::Mat(unsigned dim, std::initializer_list<unsigned> rows) : n(dim) {
  if (rows.size() != dim * dim) throw DomainError("matrix literal has wrong entry count");
  unsigned i = 0;
  for (unsigned v : rows) a[i++] = static_cast<Elem>(v);
}

Mat Mat::identity(unsigned dim) { return scalar(dim, 1); }

Mat Mat::scalar(unsigned dim, Elem c) {
  Mat m(dim);
  for (unsigned i = 0; i < dim; ++i) m(i, i) = c;
  return m;
}

Mat Mat::diag(std::initializer_list<Elem> d) {
  Mat m(static_cast<unsigned>(d.size()));
  unsigned i = 0;
  for (Elem v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

Key encode(const Mat& m) {
  Key k = 0;
  for (unsigned i = 0; i < m.n * m.n; ++i) k |= static_cast<Key>(m.a[i] & 0xF) << (4 * i);
  return k;
}

Mat decode(Key k, unsigned n) {
  Mat m(n);
  for (unsigned i = 0; i < n * n; ++i) m.a[i] = static_cast<Elem>((k >> (4 * i)) & 0xF);
  return m;
}

Mat mul(const Field& f, const Mat& x, const Mat& y) {
  const unsigned n = x.n;
  Mat r(n);
  if (f.degree() == 1) {
    const unsigned p = f.characteristic();
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        unsigned s = 0;
        for (unsigned k = 0; k < n; ++k) s += unsigned{x.a[i * n + k]} * y.a[k * n + j];
        r.a[i * n + j] = static_cast<Elem>(s % p);
      }
    return r;
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Elem s = 0;
      for (unsigned k = 0; k < n; ++k) s = f.add(s, f.mul(x.a[i * n + k], y.a[k * n + j]));
      r.a[i * n + j] = s;
    }
  return r;
}

Mat transpose(const Mat& m) {
  Mat t(m.n);
  for (unsigned i = 0; i < m.n; ++i)
    for (unsigned j = 0; j < m.n; ++j) t(i, j) = m(j, i);
  return t;
}

namespace {

// Gauss-Jordan on [m | I]; returns false if singular.  `d` receives det m.
bool reduce(const Field& f, const Mat& m, Mat& inv, Elem& d) {
  const unsigned n = m.n;
  Mat a = m;
  inv = Mat::identity(n);
  d = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) {
      d = 0;
      return false;
    }
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
      d = f.neg(d);
    }
    const Elem pv = a(c, c);
    d = f.mul(d, pv);
    const Elem s = f.inv(pv);
    for (unsigned j = 0; j < n; ++j) {
      a(c, j) = f.mul(a(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Elem t = f.neg(a(r, c));
      for (unsigned j = 0; j < n; ++j) {
        a(r, j) = f.add(a(r, j), f.mul(t, a(c, j)));
        inv(r, j) = f.add(inv(r, j), f.mul(t, inv(c, j)));
      }
    }
  }
  return true;
}

}  // namespace

Elem det(const Field& f, const Mat& m) {
  Mat inv;
  Elem d;
  reduce(f, m, inv, d);
  return d;
}

Mat inverse(const Field& f, const Mat& m) {
  Mat inv;
  Elem d;
  if (!reduce(f, m, inv, d)) throw DomainError("inverse of a singular matrix");
  return inv;
}

Mat block_diag(const Mat& x, const Mat& y) {
  Mat r(x.n + y.n);
  for (unsigned i = 0; i < x.n; ++i)
    for (unsigned j = 0; j < x.n; ++j) r(i, j) = x(i, j);
  for (unsigned i = 0; i < y.n; ++i)
    for (unsigned j = 0; j < y.n; ++j) r(x.n + i, x.n + j) = y(i, j);
  return r;
}

Mat submatrix(const Mat& m, std::initializer_list<unsigned> rows, std::initializer_list<unsigned> cols) {
  Mat r(static_cast<unsigned>(rows.size()));
  unsigned i = 0;
  for (unsigned ri : rows) {
    unsigned j = 0;
    for (unsigned cj : cols) r(i, j++) = m(ri, cj);
    ++i;
  }
  return r;
}

std::string to_string(const Field& f, const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < m.n; ++i) {
    if (i) os << "; ";
    for (unsigned j = 0; j < m.n; ++j) os << (j ? " " : "") << f.to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace phr
