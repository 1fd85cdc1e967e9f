#pragma once

#include <algorithm>
#include <cassert>
#include <complex>
#include <cstddef>
#include <vector>

namespace qes {

// Dense univariate polynomial, coefficients in ascending degree order.
// Scalar may be double, long double, std::complex<...>, mpz_class or
// mpq_class; only the operations valid for the chosen scalar are
// instantiated.
template <class Scalar>
struct Poly {
  std::vector<Scalar> c;

  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c(std::move(coeffs)) {}
  static Poly zero() { return Poly{}; }
  static Poly constant(Scalar v) { return Poly{{std::move(v)}}; }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != Scalar(0)) return false;
    return true;
  }
  // Degree of the stored representation; -1 for the zero polynomial.
  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (c[i] != Scalar(0)) return i;
    return -1;
  }
  Scalar coeff(std::size_t i) const { return i < c.size() ? c[i] : Scalar(0); }
  Scalar leading() const {
    int d = degree();
    return d < 0 ? Scalar(0) : c[d];
  }
  void trim() {
    while (!c.empty() && c.back() == Scalar(0)) c.pop_back();
  }
};

template <class S>
Poly<S> operator+(const Poly<S>& a, const Poly<S>& b) {
  Poly<S> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), S(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

template <class S>
Poly<S> operator-(const Poly<S>& a, const Poly<S>& b) {
  Poly<S> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), S(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

template <class S>
Poly<S> operator*(const Poly<S>& a, const Poly<S>& b) {
  if (a.c.empty() || b.c.empty()) return Poly<S>{};
  Poly<S> r;
  r.c.assign(a.c.size() + b.c.size() - 1, S(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

template <class S>
Poly<S> operator*(const S& s, const Poly<S>& a) {
  Poly<S> r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

template <class S>
Poly<S> operator-(const Poly<S>& a) {
  Poly<S> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

// x^k * a
template <class S>
Poly<S> shift_up(const Poly<S>& a, std::size_t k) {
  if (a.c.empty()) return a;
  Poly<S> r;
  r.c.assign(a.c.size() + k, S(0));
  std::copy(a.c.begin(), a.c.end(), r.c.begin() + static_cast<long>(k));
  return r;
}

template <class S>
Poly<S> derivative(const Poly<S>& a) {
  Poly<S> r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = S(static_cast<long>(i)) * a.c[i];
  r.trim();
  return r;
}

// Horner evaluation; X may differ from the coefficient scalar as long as
// X * X and X + S are defined (e.g. real coefficients at a complex point).
template <class X, class S>
X eval(const Poly<S>& a, const X& x) {
  X acc(0);
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * x + X(a.c[i]);
  return acc;
}

template <class To, class From>
Poly<To> poly_cast(const Poly<From>& a) {
  Poly<To> r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(static_cast<To>(x));
  return r;
}

// Monic polynomial with the given roots.
template <class S>
Poly<S> from_roots(const std::vector<S>& roots) {
  Poly<S> r = Poly<S>::constant(S(1));
  for (const auto& w : roots) r = r * Poly<S>{{-w, S(1)}};
  return r;
}

}  // namespace qes
