#include "elsym/invariants.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace elsym {

namespace {

Mat3 sym(const Mat3& m) { return 0.5 * (m + m.transpose()); }

// (T : m)_ij = T_ijkl m_kl
Mat3 contract(const Ten4& T, const Mat3& m) {
  Mat3 r = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r(i, j) += T(i, j, k, l) * m(k, l);
  return r;
}

}  // namespace

CovariantSet covariants(const Harmonic4& D) {
  const Ten4 T = D.full();

  Mat3 d2 = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          for (int r = 0; r < 3; ++r) d2(i, j) += T(i, p, q, r) * T(j, p, q, r);

  // Operator square D2_ijkl = T_ijpq T_pqkl, needed for d3 and the mixed
  // contractions below.
  Ten4 D2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double s = 0.0;
          for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) s += T(i, j, p, q) * T(p, q, k, l);
          D2(i, j, k, l) = s;
        }

  Mat3 d3 = Mat3::Zero();
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) s += T(i, j, a, b) * D2(a, b, i, l);
      d3(j, l) = s;
    }

  CovariantSet cs;
  cs.d2 = d2;
  cs.d3 = sym(d3);
  cs.d4 = d2 * d2;
  cs.d6 = cs.d4 * d2;

  const Mat3 Dd2 = contract(T, d2);
  const Mat3 D2d2 = contract(D2, d2);
  const Mat3 Dd4 = contract(T, cs.d4);
  const Mat3 D2d4 = contract(D2, cs.d4);

  cs.d5 = sym(d2 * Dd2);
  cs.d7 = sym(cs.d4 * Dd2);
  cs.d8 = sym(cs.d4 * D2d2);
  cs.d9 = sym(cs.d4 * Dd4);
  cs.d10 = sym(cs.d4 * D2d4);
  return cs;
}

InvariantVector boehler_invariants(const Harmonic4& D) {
  const CovariantSet c = covariants(D);
  InvariantVector J;
  J.J(2) = c.d2.trace();
  J.J(3) = c.d3.trace();
  J.J(4) = c.d4.trace();
  J.J(5) = c.d5.trace();
  J.J(6) = c.d6.trace();
  J.J(7) = c.d7.trace();
  J.J(8) = c.d8.trace();
  J.J(9) = c.d9.trace();
  J.J(10) = c.d10.trace();
  return J;
}

CharPoly characteristic_polynomial(const Harmonic4& D) {
  const InvariantVector J = boehler_invariants(D);
  CharPoly p;
  p.formula = {1.0,
               0.0,
               -0.5 * J.J(2),
               -J.J(3) / 3.0,
               (J.J(2) * J.J(2) - 2.0 * J.J(4)) / 5.0,
               (2.0 / 25.0) * (J.J(2) * J.J(3) - 3.0 * J.J(5)),
               0.0};

  Eigen::SelfAdjointEigenSolver<Mat6> es(D.kelvin());
  const auto& ev = es.eigenvalues();
  // Expand prod (z - ev_i) into monic coefficients.
  std::array<double, 7> c{};
  c[0] = 1.0;
  for (int i = 0; i < 6; ++i)
    for (int k = i + 1; k >= 1; --k) c[k] -= ev[i] * c[k - 1];
  p.spectral = c;
  return p;
}

Mat6 isotropic_kelvin(double lambda, double mu) {
  Mat6 K = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) K(i, j) = lambda;
    K(i, i) = lambda + 2.0 * mu;
    K(i + 3, i + 3) = 2.0 * mu;
  }
  return K;
}

double betten_identity_residual(const Harmonic4& D,
                                const std::vector<std::pair<double, double>>& samples) {
  const Mat6 K = D.kelvin();
  const InvariantVector J = boehler_invariants(D);
  double worst = 0.0;
  for (const auto& [lambda, mu] : samples) {
    const double lhs = (K - isotropic_kelvin(lambda, mu)).determinant();
    const double z = 2.0 * mu;
    const double chir = ((((z)*z - 0.5 * J.J(2)) * z - J.J(3) / 3.0) * z +
                         (J.J(2) * J.J(2) - 2.0 * J.J(4)) / 5.0) *
                            z +
                        (2.0 / 25.0) * (J.J(2) * J.J(3) - 3.0 * J.J(5));
    const double rhs = (3.0 * lambda + 2.0 * mu) * chir;
    const double res = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    worst = std::max(worst, res);
  }
  return worst;
}

NormalizedInvariants normalize(const InvariantVector& J, double scale, double tau_zero) {
  const double s = scale > 0.0 ? scale : 1.0;
  const double eps = (tau_zero * s) * (tau_zero * s);
  if (!(J.J(2) > eps)) {
    throw std::domain_error("D is numerically zero; normalization undefined");
  }
  NormalizedInvariants n;
  for (int k = 2; k <= 10; ++k) n.j(k) = J.J(k) / std::pow(J.J(2), 0.5 * k);
  return n;
}

}  // namespace elsym
