#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qes/bivar.hpp"
#include "qes/errors.hpp"
#include "qes/system.hpp"

namespace qes {

// Exact spectral polynomial Q_J: the QES locus is Q_J(b, lambda) = 0.
// Stored twice: in (b, lambda) and in the companion variable L = lambda+b^2
// in which the recurrence determinant is naturally computed.
struct SpectralPolynomial {
  int J = 0;
  BivarPoly<mpz_class> q_lambda;  // Q_J(b, lambda)
  BivarPoly<mpz_class> q_shift;   // det(L I - M(b)) in (b, L)
  // exact first partials of q_lambda
  BivarPoly<mpz_class> q_lambda_db;
  BivarPoly<mpz_class> q_lambda_dl;
  // exact first partials of q_shift
  BivarPoly<mpz_class> q_shift_db;
  BivarPoly<mpz_class> q_shift_dy;
};

template <class T>
struct QEval {
  T value{};
  T d_b{};
  T d_lambda{};
  T scale{};  // sum |c_ij| |b|^i |y|^j; 1 for exact evaluation
};

// det(L I - M(b)) for the banded recurrence matrix, expanded along last
// columns (upper Hessenberg structure: only the first sub-diagonal is
// below the diagonal, so each minor picks up a run of sub-diagonal
// entries).  Division-free over Z[b, L].
BivarPoly<mpz_class> hessenberg_char_poly(const QesSystem& sys);

// Exact construction of Q_J in both variable sets.  J above the cap is a
// resource error (coefficient bit-length grows quickly).
SpectralPolynomial spectral_polynomial(int J, int max_J = 16);

namespace detail {
template <class T>
T abs_val(const T& x) {
  if constexpr (std::is_same_v<T, mpq_class>)
    return abs(x);
  else
    return std::abs(x);
}
}  // namespace detail

template <class T>
QEval<T> eval_bivar(const BivarPoly<mpz_class>& q, const BivarPoly<mpz_class>& qb,
                    const BivarPoly<mpz_class>& qy, const T& b, const T& y) {
  QEval<T> r;
  auto horner = [](const BivarPoly<mpz_class>& p, const T& bb, const T& yy) -> T {
    if (p.is_zero()) return T(0);
    T acc(0);
    for (int j = p.dy; j >= 0; --j) {
      T row(0);
      for (int i = p.db; i >= 0; --i) row = row * bb + T(p.at(i, j));
      acc = acc * yy + row;
    }
    return acc;
  };
  r.value = horner(q, b, y);
  r.d_b = horner(qb, b, y);
  r.d_lambda = horner(qy, b, y);
  if constexpr (std::is_same_v<T, mpq_class>) {
    r.scale = T(1);
  } else {
    T ab = detail::abs_val(b), ay = detail::abs_val(y);
    T acc(0);
    for (int j = q.dy; j >= 0; --j) {
      T row(0);
      for (int i = q.db; i >= 0; --i) row = row * ab + detail::abs_val(T(q.at(i, j)));
      acc = acc * ay + row;
    }
    r.scale = acc + T(1);
  }
  return r;
}

// Value and both first partials of Q_J at (b, lambda).
template <class T>
QEval<T> eval_q(const SpectralPolynomial& Q, const T& b, const T& lambda) {
  return eval_bivar(Q.q_lambda, Q.q_lambda_db, Q.q_lambda_dl, b, lambda);
}

// Same in the companion plane (b, L).
template <class T>
QEval<T> eval_q_companion(const SpectralPolynomial& Q, const T& b, const T& L) {
  return eval_bivar(Q.q_shift, Q.q_shift_db, Q.q_shift_dy, b, L);
}

// JSON wire format: {"J":..,"vars":["b","lambda"],"terms":[[i,j,"coeff"],..]}
// with terms sorted by (j, i) descending and coefficients as decimal strings.
std::string spectral_to_json(const SpectralPolynomial& Q);
SpectralPolynomial spectral_from_json(const std::string& text);

}  // namespace qes
