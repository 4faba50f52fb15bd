#pragma once

#include <array>
#include <utility>
#include <vector>

#include "elsym/tencore.hpp"

namespace elsym {

// Covariant matrices of a harmonic fourth-order tensor. d2 is the quadratic
// covariant tr13(D^2); the higher ones are built from matrix products and
// contractions of D against d2 and d4.
struct CovariantSet {
  Mat3 d2, d3, d4, d5, d6, d7, d8, d9, d10;
};

// J2..J10 with Jk = tr(dk); deg Jk = k. J2 = <D,D> >= 0.
struct InvariantVector {
  std::array<double, 9> v{};

  double J(int k) const { return v[k - 2]; }
  double& J(int k) { return v[k - 2]; }
};

// jk = Jk / J2^(k/2); j2 = 1 by construction. Defined only for J2 > 0.
struct NormalizedInvariants {
  std::array<double, 9> v{};

  double j(int k) const { return v[k - 2]; }
  double& j(int k) { return v[k - 2]; }
};

// Monic degree-6 coefficients in descending powers of z, constant term 0.
// `formula` comes from the closed form in (J2..J5); `spectral` from the
// eigenvalues of the Kelvin matrix.
struct CharPoly {
  std::array<double, 7> formula{};
  std::array<double, 7> spectral{};
};

CovariantSet covariants(const Harmonic4& D);
InvariantVector boehler_invariants(const Harmonic4& D);

CharPoly characteristic_polynomial(const Harmonic4& D);

// Max over samples of |det(K(D) - K_{lambda,mu}) - (3 lambda + 2 mu) *
// chi^r(2 mu)| / max(1, |lhs|, |rhs|), where chi^r = chi / z.
double betten_identity_residual(const Harmonic4& D,
                                const std::vector<std::pair<double, double>>& samples);

// Kelvin matrix of the isotropic stiffness with Lame parameters (lambda, mu).
Mat6 isotropic_kelvin(double lambda, double mu);

// Throws std::domain_error when J2 <= (tau_zero * scale)^2 (D numerically 0).
NormalizedInvariants normalize(const InvariantVector& J, double scale = 1.0,
                               double tau_zero = 1e-10);

}  // namespace elsym
