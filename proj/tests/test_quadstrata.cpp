#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "elsym/classifier.hpp"
#include "elsym/quadstrata.hpp"
#include "elsym/tencore.hpp"
#include "testutil.hpp"

using namespace elsym;

namespace {

Mat3 diag3(double x, double y, double z) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = x;
  m(1, 1) = y;
  m(2, 2) = z;
  return m;
}

Mat3 random_symmetric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

// Reflection through the plane with unit normal n, as a symmetry test on C:
// even-order tensors cannot tell it apart from the half turn about n.
bool reflection_oracle(const ElasticityTensor& C, const Vec3& n, double tol) {
  const auto R = rotate(C, Rotation::half_turn(n));
  const double scale = kelvin_from_components(C).m.norm();
  return (kelvin_from_components(R).m - kelvin_from_components(C).m).norm() <=
         tol * std::max(1.0, scale);
}

}  // namespace

TEST_CASE("commutator vector of non-commuting forms") {
  const Mat3 a = diag3(1, 2, 3);
  Mat3 b = Mat3::Zero();
  b(0, 1) = b(1, 0) = 1.0;
  const Vec3 w = commutator_vector(a, b);
  // [a,b] rotates in the xy-plane, so the commutator vector is along e3.
  CHECK(std::abs(w[0]) <= 1e-14);
  CHECK(std::abs(w[1]) <= 1e-14);
  CHECK(w[2] != 0.0);
  CHECK(commutator_vector(a, diag3(4, 1, 2)).norm() == 0.0);
}

TEST_CASE("hermite count for three simple roots") {
  // (z-1)(z-2)(z-3): s = (6, 11, 6)
  const auto h = hermite_distinct_roots(6, 11, 6);
  CHECK(h.distinct_roots == 3);
  CHECK(h.all_real);
  CHECK(h.delta2 == doctest::Approx(6.0));
  CHECK(h.delta3 == doctest::Approx(4.0));
}

TEST_CASE("hermite count for a double root") {
  // (z-2)^2 (z-5): s = (9, 24, 20)
  const auto h = hermite_distinct_roots(9, 24, 20);
  CHECK(h.distinct_roots == 2);
  CHECK(h.all_real);
  CHECK(h.delta3 == doctest::Approx(0.0));
}

TEST_CASE("hermite count for a triple root") {
  // (z-1)^3: s = (3, 3, 1)
  const auto h = hermite_distinct_roots(3, 3, 1);
  CHECK(h.distinct_roots == 1);
  CHECK(h.all_real);
}

TEST_CASE("hermite count for a complex pair") {
  // (z-1)(z^2+1): s = (1, 2, 1) -> one real root
  const auto h = hermite_distinct_roots(1, 2, 1);
  CHECK(h.distinct_roots == 1);
  CHECK(!h.all_real);
  CHECK(h.delta3 < 0.0);
}

TEST_CASE("hermite agrees with eigenvalue clustering") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    const Mat3 m = random_symmetric(rng);
    const double s1 = m.trace();
    const double s2 = 0.5 * (s1 * s1 - (m * m).trace());
    const double s3 = m.determinant();
    const auto h = hermite_distinct_roots(s1, s2, s3);
    // Skip the indeterminate band around a discriminant zero.
    if (std::abs(h.delta3) < 1e-10 || std::abs(h.delta2) < 1e-10) continue;
    Eigen::SelfAdjointEigenSolver<Mat3> es(m);
    const Vec3 ev = es.eigenvalues();
    int clusters = 1;
    if (ev[1] - ev[0] > 1e-7) ++clusters;
    if (ev[2] - ev[1] > 1e-7) ++clusters;
    CHECK(h.all_real);
    CHECK(h.distinct_roots == clusters);
    ++checked;
  }
  CHECK(checked >= 450);  // the degenerate band should be rare
}

TEST_CASE("tuple of axisymmetric aligned deviators is O2") {
  const std::vector<Mat3> forms = {diag3(1, 1, -2), diag3(2, 2, -4)};
  const auto r = classify_tuple(forms);
  CHECK(r.cls == TupleClass::O2);
  CHECK(std::abs(std::abs(r.omega[2]) - 1.0) <= 1e-12);
}

TEST_CASE("tuple of commuting generic deviators is D2") {
  const std::vector<Mat3> forms = {diag3(1, 2, 3), diag3(4, 1, 2)};
  auto r = classify_tuple(forms);
  CHECK(r.cls == TupleClass::D2);

  // The class is conjugation invariant and omega co-rotates.
  std::mt19937_64 rng(32);
  const Mat3 g = Rotation::random(rng).matrix();
  std::vector<Mat3> rotated;
  for (const auto& f : forms) rotated.push_back(g * f * g.transpose());
  const auto rr = classify_tuple(rotated);
  CHECK(rr.cls == TupleClass::D2);
  // omega is an eigenvector axis; compare up to sign.
  const Vec3 gw = g * r.omega;
  CHECK(std::min((rr.omega - gw).norm(), (rr.omega + gw).norm()) <= 1e-8);
}

TEST_CASE("tuple with a single shared eigenvector is Z2") {
  Mat3 b = Mat3::Zero();
  b(0, 1) = b(1, 0) = 1.0;  // shares only the e3 eigenvector with diag(1,2,3)
  const auto r = classify_tuple({diag3(1, 2, 3), b});
  CHECK(r.cls == TupleClass::Z2);
  CHECK(std::abs(std::abs(r.omega[2]) - 1.0) <= 1e-10);
}

TEST_CASE("tuple without a common eigenvector is TRIV") {
  Mat3 b = Mat3::Zero();
  b(0, 1) = b(1, 0) = 1.0;
  Mat3 c = Mat3::Zero();
  c(1, 2) = c(2, 1) = 1.0;
  const auto r = classify_tuple({diag3(1, 2, 3), b, c});
  CHECK(r.cls == TupleClass::TRIV);
}

TEST_CASE("tuple of zero deviators is SO3") {
  const auto r = classify_tuple({Mat3::Zero(), Mat3::Zero()});
  CHECK(r.cls == TupleClass::SO3);
  // Isotropic parts do not count as anisotropy.
  const auto r2 = classify_tuple({Mat3::Identity() * 2.0, Mat3::Zero()});
  CHECK(r2.cls == TupleClass::SO3);
}

TEST_CASE("tuple significance floor uses the reference scale") {
  // A deviator of size 1e-9 is significant on its own scale but noise
  // relative to an ambient scale of 1.
  const std::vector<Mat3> forms = {1e-9 * diag3(1, 2, -3), Mat3::Zero()};
  CHECK(classify_tuple(forms, 1e-8, 1.0).cls == TupleClass::SO3);
  CHECK(classify_tuple(forms, 1e-8, 0.0).cls == TupleClass::D2);
}

TEST_CASE("tuple verdict is monotone in the tolerance") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 50; ++t) {
    std::vector<Mat3> forms = {random_symmetric(rng), random_symmetric(rng)};
    int prev = -1;
    for (double tol : {1e-12, 1e-8, 1e-4, 1e-1, 10.0}) {
      const int cls = static_cast<int>(classify_tuple(forms, tol).cls);
      if (prev >= 0) CHECK(cls >= prev);
      prev = cls;
    }
  }
}

TEST_CASE("plane normal test on a transverse tensor") {
  HarmonicDecomposition parts;
  parts.lambda = 2.0;
  parts.mu = 1.0;
  parts.D = normal_form_transverse(0.8);
  const auto C = harmonic_recompose(parts);
  CHECK(cowin_mehrabadi(C, Vec3(0, 0, 1)));
  CHECK(cowin_mehrabadi(C, Vec3(1, 0, 0)));  // every normal in the plane works too
  const Vec3 diag = Vec3(1, 1, 1).normalized();
  CHECK(!cowin_mehrabadi(C, diag));
}

TEST_CASE("plane normal test on a monoclinic tensor") {
  const auto C = generate_sample(SymClass::MONOCLINIC, default_params(SymClass::MONOCLINIC),
                                 Rotation::identity(), default_lowparts(SymClass::MONOCLINIC));
  CHECK(cowin_mehrabadi(C, Vec3(0, 0, 1)));
  CHECK(!cowin_mehrabadi(C, Vec3(1, 0, 0)));
  CHECK(!cowin_mehrabadi(C, Vec3(0, 1, 0)));
}

TEST_CASE("plane normal test rejects a zero direction") {
  const auto C = ElasticityTensor::from_voigt(Mat6::Identity());
  CHECK_THROWS_AS(cowin_mehrabadi(C, Vec3::Zero()), std::invalid_argument);
}

TEST_CASE("plane normal test agrees with the reflection oracle") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SymClass classes[4] = {SymClass::MONOCLINIC, SymClass::ORTHOTROPIC,
                               SymClass::TRANSVERSE, SymClass::TRICLINIC};
  for (int t = 0; t < 200; ++t) {
    const SymClass cls = classes[t % 4];
    const auto C = testutil::random_sample(cls, rng);
    // Candidate directions: random plus the coordinate axes of the frame.
    Vec3 n(u(rng), u(rng), u(rng));
    if (n.norm() < 1e-3) n = Vec3(1, 0, 0);
    n.normalize();
    CHECK(cowin_mehrabadi(C, n, 1e-8) == reflection_oracle(C, n, 1e-8));
  }
}

TEST_CASE("plane normal test finds the axes of a rotated orthotropic tensor") {
  std::mt19937_64 rng(35);
  const auto g = Rotation::random(rng);
  const auto C = generate_sample(SymClass::ORTHOTROPIC, default_params(SymClass::ORTHOTROPIC), g,
                                 default_lowparts(SymClass::ORTHOTROPIC));
  for (int k = 0; k < 3; ++k) {
    const Vec3 n = g.matrix().col(k);
    CHECK(cowin_mehrabadi(C, n));
    CHECK(reflection_oracle(C, n, 1e-8));
  }
}
