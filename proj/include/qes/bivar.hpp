#pragma once

#include <cstddef>
#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

namespace qes {

// Dense bivariate polynomial in (b, y) where y is either lambda or the
// shifted eigenvalue L = lambda + b^2.  Coefficient of b^i y^j sits at
// (i, j).  Exact integer coefficients by default.
template <class Coeff = mpz_class>
struct BivarPoly {
  int db = -1;  // degree in b (-1: zero polynomial)
  int dy = -1;  // degree in y
  std::vector<Coeff> c;

  BivarPoly() = default;
  BivarPoly(int degree_b, int degree_y)
      : db(degree_b), dy(degree_y),
        c(static_cast<std::size_t>(degree_b + 1) * static_cast<std::size_t>(degree_y + 1),
          Coeff(0)) {}

  static BivarPoly zero() { return BivarPoly(); }
  static BivarPoly constant(Coeff v) {
    BivarPoly p(0, 0);
    p.c[0] = std::move(v);
    return p;
  }
  // b^i y^j with the given coefficient
  static BivarPoly monomial(int i, int j, Coeff v) {
    BivarPoly p(i, j);
    p.at(i, j) = std::move(v);
    return p;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  Coeff& at(int i, int j) { return c[static_cast<std::size_t>(j) * (db + 1) + i]; }
  const Coeff& at(int i, int j) const { return c[static_cast<std::size_t>(j) * (db + 1) + i]; }
  Coeff coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > db || j > dy) return Coeff(0);
    return at(i, j);
  }

  void trim() {
    int ndb = -1, ndy = -1;
    for (int j = 0; j <= dy; ++j)
      for (int i = 0; i <= db; ++i)
        if (at(i, j) != 0) {
          ndb = std::max(ndb, i);
          ndy = std::max(ndy, j);
        }
    if (ndb == db && ndy == dy) return;
    BivarPoly t;
    if (ndb >= 0) {
      t = BivarPoly(ndb, ndy);
      for (int j = 0; j <= ndy; ++j)
        for (int i = 0; i <= ndb; ++i) t.at(i, j) = at(i, j);
    }
    *this = std::move(t);
  }

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    BivarPoly r(std::max(a.db, b.db), std::max(a.dy, b.dy));
    for (int j = 0; j <= r.dy; ++j)
      for (int i = 0; i <= r.db; ++i) r.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
    r.trim();
    return r;
  }
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    if (b.is_zero()) return a;
    BivarPoly r(std::max(a.db, b.db), std::max(a.dy, b.dy));
    for (int j = 0; j <= r.dy; ++j)
      for (int i = 0; i <= r.db; ++i) r.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
    r.trim();
    return r;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return BivarPoly();
    BivarPoly r(a.db + b.db, a.dy + b.dy);
    for (int j1 = 0; j1 <= a.dy; ++j1)
      for (int i1 = 0; i1 <= a.db; ++i1) {
        const Coeff& x = a.at(i1, j1);
        if (x == 0) continue;
        for (int j2 = 0; j2 <= b.dy; ++j2)
          for (int i2 = 0; i2 <= b.db; ++i2) {
            const Coeff& y = b.at(i2, j2);
            if (y == 0) continue;
            r.at(i1 + i2, j1 + j2) += x * y;
          }
      }
    r.trim();
    return r;
  }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly d = a - b;
    return d.is_zero();
  }

  BivarPoly derivative_b() const {
    if (db <= 0) return BivarPoly();
    BivarPoly r(db - 1, dy);
    for (int j = 0; j <= dy; ++j)
      for (int i = 1; i <= db; ++i) r.at(i - 1, j) = at(i, j) * i;
    r.trim();
    return r;
  }
  BivarPoly derivative_y() const {
    if (dy <= 0) return BivarPoly();
    BivarPoly r(db, dy - 1);
    for (int j = 1; j <= dy; ++j)
      for (int i = 0; i <= db; ++i) r.at(i, j - 1) = at(i, j) * j;
    r.trim();
    return r;
  }

  // Coefficient of y^j as a univariate polynomial in b (ascending).
  std::vector<Coeff> y_coeff_poly(int j) const {
    std::vector<Coeff> out(static_cast<std::size_t>(db + 1), Coeff(0));
    if (j >= 0 && j <= dy)
      for (int i = 0; i <= db; ++i) out[static_cast<std::size_t>(i)] = at(i, j);
    return out;
  }

  // Plain Horner evaluation at scalar (b, y) of any arithmetic type.
  template <class T>
  T operator()(const T& b, const T& y) const {
    T acc(0);
    for (int j = dy; j >= 0; --j) {
      T row(0);
      for (int i = db; i >= 0; --i) row = row * b + T(at(i, j));
      acc = acc * y + row;
    }
    return acc;
  }
};

// Substitute y -> lambda + b^2: maps the (b, L) companion table to the
// (b, lambda) table.
inline BivarPoly<mpz_class> substitute_shift(const BivarPoly<mpz_class>& q) {
  BivarPoly<mpz_class> out;
  if (q.is_zero()) return out;
  out = BivarPoly<mpz_class>(q.db + 2 * q.dy, q.dy);
  for (int j = 0; j <= q.dy; ++j)
    for (int i = 0; i <= q.db; ++i) {
      const mpz_class& v = q.at(i, j);
      if (v == 0) continue;
      // b^i (lambda + b^2)^j
      for (int k = 0; k <= j; ++k) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(j),
                     static_cast<unsigned long>(k));
        out.at(i + 2 * (j - k), k) += v * bin;
      }
    }
  out.trim();
  return out;
}

// Substitute y -> lambda - b^2 (inverse of substitute_shift).
inline BivarPoly<mpz_class> substitute_unshift(const BivarPoly<mpz_class>& q) {
  BivarPoly<mpz_class> out;
  if (q.is_zero()) return out;
  out = BivarPoly<mpz_class>(q.db + 2 * q.dy, q.dy);
  for (int j = 0; j <= q.dy; ++j)
    for (int i = 0; i <= q.db; ++i) {
      const mpz_class& v = q.at(i, j);
      if (v == 0) continue;
      for (int k = 0; k <= j; ++k) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(j),
                     static_cast<unsigned long>(k));
        mpz_class term = v * bin;
        if ((j - k) % 2 == 1) term = -term;
        out.at(i + 2 * (j - k), k) += term;
      }
    }
  out.trim();
  return out;
}

template <class To>
BivarPoly<To> bivar_cast(const BivarPoly<mpz_class>& q) {
  BivarPoly<To> r;
  if (q.is_zero()) return r;
  r.db = q.db;
  r.dy = q.dy;
  r.c.resize(q.c.size());
  for (std::size_t k = 0; k < q.c.size(); ++k) r.c[k] = static_cast<To>(q.c[k].get_d());
  return r;
}

}  // namespace qes
