#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qes/errors.hpp"
#include "qes/poly.hpp"

namespace qes {

// The eigenvalue parameter that diagonalizes the coefficient recurrence is
// L = lambda + b^2 throughout; lambda is the eigenvalue of the quartic
// operator itself.

enum class Normalization { LeadingOne, UnitNorm };

template <class T>
struct EigenCoefficients {
  std::vector<T> a;  // a_0 .. a_n of the eigen-polynomial p
  Normalization norm = Normalization::LeadingOne;
};

// Banded coefficient recurrence for eigen-polynomials p of degree n = J-1:
// substituting y = p(z) exp(z^3/3 - b z) into the quartic operator gives
//   2(n-m+1) a_{m-1} + 2b(m+1) a_{m+1} - (m+2)(m+1) a_{m+2} = L a_m,
// i.e. M(b) a = L a with M carrying one sub- and two super-diagonals.
struct QesSystem {
  int J = 0;
  int n = -1;

  // M[m][m-1], constant
  long sub(int m) const { return 2L * (n - m + 1); }
  // M[m][m+1] = sup_b(m) * b
  long sup_b(int m) const { return 2L * (m + 1); }
  // M[m][m+2], constant
  long sup2(int m) const { return -static_cast<long>(m + 2) * (m + 1); }

  // Exponent polynomial h(z) = z^3/3 - b z as coefficient pairs (kept
  // symbolically: {power, rational coefficient in b}).
  //   h = (1/3) z^3 + (-b) z
  template <class T>
  T h_at(const T& z, const T& b) const {
    return z * z * z / T(3) - b * z;
  }
  template <class T>
  T h_prime_at(const T& z, const T& b) const {
    return z * z - b;
  }

  template <class Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix_at(const Scalar& b) const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> M(n + 1, n + 1);
    M.setZero();
    for (int m = 0; m <= n; ++m) {
      if (m - 1 >= 0) M(m, m - 1) = Scalar(sub(m));
      if (m + 1 <= n) M(m, m + 1) = Scalar(sup_b(m)) * b;
      if (m + 2 <= n) M(m, m + 2) = Scalar(sup2(m));
    }
    return M;
  }
};

inline QesSystem build_recurrence(int J) {
  if (J <= 0) throw InputError("build_recurrence: J must be a positive integer");
  QesSystem s;
  s.J = J;
  s.n = J - 1;
  return s;
}

// Coefficients of the substituted operator applied to p:
//   -p'' - 2(z^2 - b) p' + 2(J-1) z p - (lambda + b^2) p
// as a polynomial in z.  Exactly zero iff (b, lambda, a) is a QES eigenpair.
template <class T>
Poly<T> operator_residual_poly(const QesSystem& sys, const T& b, const T& lambda,
                               const std::vector<T>& a) {
  Poly<T> p{std::vector<T>(a)};
  T L = lambda + b * b;
  Poly<T> dp = derivative(p);
  Poly<T> ddp = derivative(dp);
  Poly<T> z2mb{{-b, T(0), T(1)}};  // z^2 - b
  Poly<T> zp = shift_up(p, 1);
  Poly<T> r = -ddp - T(2) * (z2mb * dp) + T(2 * (sys.J - 1)) * zp - L * p;
  return r;
}

template <class T>
T abs_generic(const T& x) {
  if constexpr (std::is_same_v<T, mpq_class> || std::is_same_v<T, mpz_class>)
    return abs(x);
  else
    return std::abs(x);
}

// Max-magnitude coefficient of the substituted-operator residual.  Exact
// type in, exact zero out at exact locus points.
template <class T>
T eigenfunction_residual(const QesSystem& sys, const T& b, const T& lambda,
                         const std::vector<T>& a) {
  if (static_cast<int>(a.size()) != sys.n + 1)
    throw InputError("eigenfunction_residual: coefficient count must be n+1");
  Poly<T> r = operator_residual_poly(sys, b, lambda, a);
  T m(0);
  for (const auto& x : r.c) {
    T ax = abs_generic(x);
    if (ax > m) m = ax;
  }
  return m;
}

// Residual relative to the natural magnitude of the recurrence rows; used
// for floating-point on-locus checks.
template <class T>
T eigenfunction_residual_rel(const QesSystem& sys, const T& b, const T& lambda,
                             const std::vector<T>& a) {
  T raw = eigenfunction_residual(sys, b, lambda, a);
  T amax(0);
  for (const auto& x : a) amax = std::max(amax, std::abs(x));
  T L = lambda + b * b;
  T scale = amax * (T(1) + std::abs(L) + T(2) * (T(1) + std::abs(b)) * T(sys.n + 1) +
                    T((sys.n + 2) * (sys.n + 1)));
  return raw / scale;
}

// Nullspace vector of M(b) - L I via back-substitution from a_n = 1 (rows
// n..1 determine a uniquely; row 0 vanishes exactly on the locus).
template <class T>
EigenCoefficients<T> eigenvector_at(const QesSystem& sys, const T& b, const T& lambda) {
  const int n = sys.n;
  std::vector<T> a(static_cast<std::size_t>(n) + 1, T(0));
  T L = lambda + b * b;
  a[static_cast<std::size_t>(n)] = T(1);
  auto get = [&](int m) -> T {
    return (m >= 0 && m <= n) ? a[static_cast<std::size_t>(m)] : T(0);
  };
  for (int m = n; m >= 1; --m) {
    T rhs = L * get(m) - T(sys.sup_b(m)) * b * get(m + 1) - T(sys.sup2(m)) * get(m + 2);
    a[static_cast<std::size_t>(m - 1)] = rhs / T(sys.sub(m));
  }
  // row 0 residual decides membership
  T r0 = T(sys.sup_b(0)) * b * get(1) + T(sys.sup2(0)) * get(2) - L * get(0);
  if constexpr (std::is_same_v<T, mpq_class>) {
    if (r0 != 0) throw NotOnLocus("eigenvector_at: exact point not on the spectral locus");
  } else {
    T amax(0);
    for (const auto& x : a) {
      if (!std::isfinite(static_cast<double>(std::abs(x))))
        throw Degenerate("eigenvector_at: non-finite coefficients");
      amax = std::max(amax, std::abs(x));
    }
    T scale = amax * (T(1) + std::abs(L) + T(2) * (T(1) + std::abs(b)));
    if (std::abs(r0) > T(1e-7) * scale)
      throw NotOnLocus("eigenvector_at: recurrence residual " +
                       std::to_string(static_cast<double>(std::abs(r0) / scale)) +
                       " exceeds locus tolerance");
  }
  EigenCoefficients<T> out;
  out.a = std::move(a);
  out.norm = Normalization::LeadingOne;
  return out;
}

// Eq-(1)-compatible sign convention: reporting eigenvalues as -lambda makes
// the large-b asymptotics read lambda_hat ~ b^2 + (mu - 2J) sqrt(b).
template <class T>
std::pair<T, T> to_physics_convention(const T& b, const T& lambda) {
  return {b, -lambda};
}

}  // namespace qes
