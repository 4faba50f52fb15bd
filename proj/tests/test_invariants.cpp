#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "elsym/h4strata.hpp"
#include "elsym/invariants.hpp"
#include "elsym/tencore.hpp"

using namespace elsym;

namespace {

Harmonic4 random_harmonic(std::mt19937_64& rng, double amp = 1.0) {
  std::uniform_real_distribution<double> u(-amp, amp);
  std::array<double, 9> h;
  for (auto& x : h) x = u(rng);
  return Harmonic4::from_h(h);
}

}  // namespace

TEST_CASE("quadratic covariant of the cubic slice") {
  const auto cov = covariants(normal_form_cubic(1.0));
  CHECK(cov.d2.trace() == doctest::Approx(480.0).epsilon(1e-12));
  CHECK((cov.d2 - cov.d2.transpose()).norm() == 0.0);
}

TEST_CASE("invariants are the covariant traces") {
  std::mt19937_64 rng(21);
  const auto D = random_harmonic(rng);
  const auto cov = covariants(D);
  const auto J = boehler_invariants(D);
  const Mat3* dk[9] = {&cov.d2, &cov.d3, &cov.d4, &cov.d5, &cov.d6,
                       &cov.d7, &cov.d8, &cov.d9, &cov.d10};
  for (int k = 2; k <= 10; ++k)
    CHECK(J.J(k) == doctest::Approx(dk[k - 2]->trace()).epsilon(1e-12));
  CHECK(J.J(2) == doctest::Approx(D.kelvin().squaredNorm()).epsilon(1e-12));
  CHECK(J.J(2) >= 0.0);
}

TEST_CASE("invariant vector of the cubic slice") {
  const auto J = boehler_invariants(normal_form_cubic(1.0));
  const double want[9] = {480, 1920, 76800, 0, 12288000, 0, 0, 0, 0};
  for (int k = 2; k <= 10; ++k) {
    if (want[k - 2] == 0.0)
      CHECK(std::abs(J.J(k)) <= 1e-6);  // degree-k values reach ~1e10
    else
      CHECK(J.J(k) == doctest::Approx(want[k - 2]).epsilon(1e-10));
  }
}

TEST_CASE("invariant vector of the transverse slice") {
  const auto J = boehler_invariants(normal_form_transverse(1.0));
  const double want[9] = {280,      720,       32800,      80000,       4528000,
                          17600000, 211200000, 3872000000, 46464000000};
  for (int k = 2; k <= 10; ++k) CHECK(J.J(k) == doctest::Approx(want[k - 2]).epsilon(1e-10));
}

TEST_CASE("trigonal slice invariants match the parametric forms") {
  const auto J = boehler_invariants(normal_form_trigonal(1.0, 1.0));
  CHECK(J.J(2) == doctest::Approx(296.0).epsilon(1e-12));
  CHECK(J.J(3) == doctest::Approx(576.0).epsilon(1e-12));
  const auto P = trigonal_parametric(1.0, 1.0);
  for (int k = 2; k <= 10; ++k)
    CHECK(J.J(k) == doctest::Approx(P.J(k)).epsilon(1e-9));
}

TEST_CASE("invariants are rotation invariant") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 25; ++t) {
    const auto D = random_harmonic(rng);
    const auto J0 = boehler_invariants(D);
    const auto J1 = boehler_invariants(D.rotated(Rotation::random(rng)));
    for (int k = 2; k <= 10; ++k) {
      const double scale = std::pow(J0.J(2), 0.5 * k);
      CHECK(std::abs(J1.J(k) - J0.J(k)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("invariants are homogeneous of degree k") {
  std::mt19937_64 rng(23);
  const auto D = random_harmonic(rng);
  const auto J = boehler_invariants(D);
  for (double t : {0.5, 2.0, 10.0}) {
    std::array<double, 9> h;
    for (int i = 0; i < 9; ++i) h[i] = t * D.h()[i];
    const auto Jt = boehler_invariants(Harmonic4::from_h(h));
    for (int k = 2; k <= 10; ++k)
      CHECK(Jt.J(k) == doctest::Approx(std::pow(t, k) * J.J(k)).epsilon(1e-12));
  }
}

TEST_CASE("characteristic polynomial formula matches the spectrum") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    const auto D = random_harmonic(rng);
    const auto cp = characteristic_polynomial(D);
    const double j2 = boehler_invariants(D).J(2);
    for (int i = 0; i <= 6; ++i) {
      const double scale = std::max(1.0, std::pow(j2, 0.5 * i));
      CHECK(std::abs(cp.formula[i] - cp.spectral[i]) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("characteristic polynomial of the cubic slice") {
  const auto D = normal_form_cubic(1.0);
  // Kelvin eigenvalues are {12, 12, 0, -8, -8, -8}.
  Eigen::SelfAdjointEigenSolver<Mat6> es(D.kelvin());
  const double want[6] = {-8, -8, -8, 0, 12, 12};
  for (int i = 0; i < 6; ++i) CHECK(es.eigenvalues()[i] == doctest::Approx(want[i]).epsilon(1e-12));

  const auto cp = characteristic_polynomial(D);
  CHECK(cp.formula[0] == 1.0);  // monic
  CHECK(cp.formula[6] == 0.0);  // z = 0 is always a root
  CHECK(std::abs(cp.spectral[6]) <= 1e-8);
  // chi(z) = z (z - 12)^2 (z + 8)^3 expanded against the formula side.
  const double expect[7] = {1, 0, -240, -640, 15360, 73728, 0};
  for (int i = 0; i <= 6; ++i)
    CHECK(cp.formula[i] == doctest::Approx(expect[i]).epsilon(1e-10));
}

TEST_CASE("determinant identity holds on random tensors") {
  std::mt19937_64 rng(25);
  const std::vector<std::pair<double, double>> samples = {
      {1.0, 1.0}, {2.0, 0.7}, {-0.4, 1.3}, {0.0, 1.0}, {3.5, 0.1}};
  for (int t = 0; t < 50; ++t) {
    const auto D = random_harmonic(rng);
    CHECK(betten_identity_residual(D, samples) <= 1e-8);
  }
}

TEST_CASE("determinant identity degenerates when 3 lambda + 2 mu = 0") {
  std::mt19937_64 rng(26);
  const auto D = random_harmonic(rng);
  const double mu = 0.9, lambda = -2.0 * mu / 3.0;
  const Mat6 A = D.kelvin() - isotropic_kelvin(lambda, mu);
  // The hydrostatic direction is a kernel vector of both terms.
  Eigen::Matrix<double, 6, 1> q;
  q << 1, 1, 1, 0, 0, 0;
  CHECK((A * q).norm() <= 1e-10 * A.norm());
  CHECK(std::abs(A.determinant()) <= 1e-10 * std::pow(A.norm(), 6));
  CHECK(betten_identity_residual(D, {{lambda, mu}}) <= 1e-8);
}

TEST_CASE("isotropic kelvin blocks") {
  const Mat6 K = isotropic_kelvin(1.0, 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(K(i, j) == doctest::Approx(i == j ? 3.0 : 1.0));
  for (int k = 3; k < 6; ++k) CHECK(K(k, k) == doctest::Approx(2.0));
}

TEST_CASE("normalization of the cubic slice") {
  const auto J = boehler_invariants(normal_form_cubic(1.0));
  const auto jn = normalize(J);
  CHECK(jn.j(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(jn.j(3) == doctest::Approx(0.18257418583505536).epsilon(1e-12));
  CHECK(jn.j(4) == doctest::Approx(76800.0 / (480.0 * 480.0)).epsilon(1e-12));
}

TEST_CASE("normalization rejects the zero tensor") {
  const auto J = boehler_invariants(Harmonic4{});
  CHECK_THROWS_AS(normalize(J), std::domain_error);
  // Scale-relative zero test: a tiny D inside a large tensor is "zero".
  const auto Jt = boehler_invariants(normal_form_cubic(1e-12));
  CHECK_THROWS_AS(normalize(Jt, 1.0), std::domain_error);
  CHECK_NOTHROW(normalize(Jt, 1e-14));
}

TEST_CASE("nearby slice points are separated by the invariants") {
  const auto Ja = boehler_invariants(normal_form_cubic(1.0));
  const auto Jb = boehler_invariants(normal_form_cubic(1.1));
  const double da = Ja.J(3) / (4.0 * Ja.J(2));
  const double db = Jb.J(3) / (4.0 * Jb.J(2));
  CHECK(da == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(db == doctest::Approx(1.1).epsilon(1e-12));
}
