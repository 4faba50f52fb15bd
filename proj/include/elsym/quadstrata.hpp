#pragma once

#include <vector>

#include "elsym/tencore.hpp"

namespace elsym {

// Isotropy classes of a tuple of quadratic forms; totally ordered
// TRIV < Z2 < D2 < O2 < SO3.
enum class TupleClass { TRIV, Z2, D2, O2, SO3 };

const char* to_string(TupleClass c);

struct TupleClassResult {
  TupleClass cls = TupleClass::TRIV;
  // Common axis witness: the shared eigenvector for Z2/D2, the symmetry axis
  // for O2, zero for TRIV and SO3 (no distinguished axis).
  Vec3 omega = Vec3::Zero();
};

// omega = j^{-1}(ab - ba) with j(w)x = w cross x.
Vec3 commutator_vector(const Mat3& a, const Mat3& b);

struct HermiteResult {
  int distinct_roots = 1;
  bool all_real = true;
  double delta2 = 0.0;
  double delta3 = 0.0;
};

// Real-root count of z^3 - s1 z^2 + s2 z - s3 from the Hankel minors
// Delta2 = 2 s1^2 - 6 s2, Delta3 = discriminant. `band` is the absolute
// zero-test width.
HermiteResult hermite_distinct_roots(double s1, double s2, double s3, double band = 1e-10);

// Classifies by checking, in order: all deviators zero (SO3); every
// significant deviator axisymmetric plus pairwise alignment (O2); all
// commutators zero (D2); a common eigenvector exists (Z2); else TRIV.
// `ref_scale` enters the significance test as a floor on each form's scale
// (pass the ambient scale when the forms were pre-normalized).
TupleClassResult classify_tuple(const std::vector<Mat3>& forms, double tol = 1e-8,
                                double ref_scale = 0.0);

// True iff n is normal to a material symmetry plane of C: d.n and v.n
// parallel to n, (C:n(x)n).n parallel to n, and (C:m(x)m).n parallel to n for
// two orthonormal m spanning the plane. Throws on a zero n.
bool cowin_mehrabadi(const ElasticityTensor& C, const Vec3& n, double tol = 1e-8);

}  // namespace elsym
