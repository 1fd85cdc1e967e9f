#include "qes/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <tuple>

namespace qes {

namespace {

// Entry (r, c) of A = L I - M(b) as an exact bivariate polynomial.
BivarPoly<mpz_class> entry_poly(const QesSystem& sys, int r, int c) {
  using BP = BivarPoly<mpz_class>;
  if (r == c) return BP::monomial(0, 1, 1);                     // L
  if (c == r - 1) return BP::constant(mpz_class(-sys.sub(r)));  // -2(n-r+1)
  if (c == r + 1) return BP::monomial(1, 0, mpz_class(-sys.sup_b(r)));
  if (c == r + 2) return BP::constant(mpz_class(-sys.sup2(r)));
  return BP::zero();
}

}  // namespace

BivarPoly<mpz_class> hessenberg_char_poly(const QesSystem& sys) {
  using BP = BivarPoly<mpz_class>;
  const int N = sys.n + 1;
  std::vector<BP> D(static_cast<std::size_t>(N) + 1);
  D[0] = BP::constant(1);
  for (int k = 1; k <= N; ++k) {
    BP acc;
    mpz_class subprod = 1;  // product of A[i][i-1], i = j+1 .. k-1
    int sign = 1;
    for (int j = k - 1; j >= 0 && j >= k - 3; --j) {
      BP a = entry_poly(sys, j, k - 1);
      if (!a.is_zero()) {
        BP term = a * D[static_cast<std::size_t>(j)];
        mpz_class factor = subprod;
        if (sign < 0) factor = -factor;
        acc = acc + BP::constant(factor) * term;
      }
      if (j >= 1) {
        subprod *= mpz_class(-sys.sub(j));
        sign = -sign;
      }
    }
    D[static_cast<std::size_t>(k)] = acc;
  }
  return D[static_cast<std::size_t>(N)];
}

SpectralPolynomial spectral_polynomial(int J, int max_J) {
  if (J <= 0) throw InputError("spectral_polynomial: J must be a positive integer");
  if (J > max_J)
    throw ResourceLimit("spectral_polynomial: J=" + std::to_string(J) +
                        " exceeds configured maximum " + std::to_string(max_J));
  SpectralPolynomial Q;
  Q.J = J;
  QesSystem sys = build_recurrence(J);
  Q.q_shift = hessenberg_char_poly(sys);
  Q.q_lambda = substitute_shift(Q.q_shift);
  Q.q_lambda_db = Q.q_lambda.derivative_b();
  Q.q_lambda_dl = Q.q_lambda.derivative_y();
  Q.q_shift_db = Q.q_shift.derivative_b();
  Q.q_shift_dy = Q.q_shift.derivative_y();
  return Q;
}

std::string spectral_to_json(const SpectralPolynomial& Q) {
  nlohmann::json j;
  j["J"] = Q.J;
  j["vars"] = {"b", "lambda"};
  std::vector<std::tuple<int, int, std::string>> terms;
  const auto& q = Q.q_lambda;
  for (int jj = 0; jj <= q.dy; ++jj)
    for (int i = 0; i <= q.db; ++i)
      if (q.at(i, jj) != 0) terms.emplace_back(i, jj, q.at(i, jj).get_str());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
    return std::get<0>(a) > std::get<0>(b);
  });
  j["terms"] = nlohmann::json::array();
  for (const auto& [i, jj, s] : terms) j["terms"].push_back({i, jj, s});
  return j.dump();
}

SpectralPolynomial spectral_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SpectralPolynomial Q;
  Q.J = j.at("J").get<int>();
  int db = 0, dl = 0;
  for (const auto& t : j.at("terms")) {
    db = std::max(db, t.at(0).get<int>());
    dl = std::max(dl, t.at(1).get<int>());
  }
  Q.q_lambda = BivarPoly<mpz_class>(db, dl);
  for (const auto& t : j.at("terms"))
    Q.q_lambda.at(t.at(0).get<int>(), t.at(1).get<int>()) =
        mpz_class(t.at(2).get<std::string>());
  Q.q_shift = substitute_unshift(Q.q_lambda);
  Q.q_lambda_db = Q.q_lambda.derivative_b();
  Q.q_lambda_dl = Q.q_lambda.derivative_y();
  Q.q_shift_db = Q.q_shift.derivative_b();
  Q.q_shift_dy = Q.q_shift.derivative_y();
  return Q;
}

}  // namespace qes
