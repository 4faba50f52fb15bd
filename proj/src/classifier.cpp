#include "elsym/classifier.hpp"

#include <Eigen/Eigenvalues>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace elsym {

namespace {

SymClass map_tuple(TupleClass t) {
  switch (t) {
    case TupleClass::SO3: return SymClass::ISOTROPIC;
    case TupleClass::O2: return SymClass::TRANSVERSE;
    case TupleClass::D2: return SymClass::ORTHOTROPIC;
    case TupleClass::Z2: return SymClass::MONOCLINIC;
    case TupleClass::TRIV: return SymClass::TRICLINIC;
  }
  return SymClass::TRICLINIC;
}

const StratumResult* find_stratum(const std::vector<StratumResult>& strata, SymClass cls) {
  for (const auto& r : strata)
    if (r.cls == cls) return &r;
  return nullptr;
}

bool is_one_of(SymClass c, std::initializer_list<SymClass> set) {
  for (SymClass s : set)
    if (c == s) return true;
  return false;
}

}  // namespace

std::string digest_of(const ElasticityTensor& C) {
  std::uint64_t h = 1469598103934665603ULL;
  for (double x : C.components()) {
    if (x == 0.0) x = 0.0;  // collapse -0.0
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof bytes);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Certificate classify(const ElasticityTensor& C, const ToleranceProfile& tol, bool strict_mga) {
  Certificate cert;
  cert.tol = tol;
  cert.strict_mga = strict_mga;
  cert.digest = digest_of(C);

  double scale = kelvin_from_components(C).m.norm();
  if (!(scale > 0.0)) scale = 1.0;
  cert.scale = scale;

  cert.parts = harmonic_decompose(C);
  const CovariantSet cov = covariants(cert.parts.D);
  cert.J = boehler_invariants(cert.parts.D);

  const double dz = tol.tau_zero * scale;
  cert.d_zero = cert.J.J(2) <= dz * dz;

  const double s2 = scale * scale;
  const std::vector<Mat3> L = {cert.parts.a.matrix() / scale, cert.parts.b.matrix() / scale,
                               cov.d2 / s2};
  cert.tuple = classify_tuple(L, tol.tau_syzygy, 1.0);

  if (cert.d_zero) {
    cert.strata = {test_isotropic(cert.J, tol.tau_syzygy, scale, tol.tau_zero)};
  } else {
    cert.jn = normalize(cert.J, scale, tol.tau_zero);
    cert.have_jn = true;
    cert.strata = {test_isotropic(cert.J, tol.tau_syzygy, scale, tol.tau_zero),
                   test_cubic(cert.J, tol.tau_syzygy),
                   test_transverse(cert.J, tol.tau_syzygy),
                   test_trigonal(cert.J, tol.tau_syzygy),
                   test_tetragonal(cert.J, tol.tau_syzygy),
                   test_orthotropic(cert.J, tol.tau_syzygy)};
    cert.bifurcation = bifurcation_path(cert.J, tol.tau_syzygy, scale, tol.tau_zero);
  }

  switch (cert.tuple.cls) {
    case TupleClass::TRIV:
      cert.cls = SymClass::TRICLINIC;
      break;
    case TupleClass::Z2: {
      cert.cm_run = true;
      cert.cm_axis = cert.tuple.omega;
      cert.cm_result = cowin_mehrabadi(C, cert.cm_axis, tol.tau_syzygy);
      cert.cls = cert.cm_result ? SymClass::MONOCLINIC : SymClass::TRICLINIC;
      break;
    }
    default: {
      if (cert.d_zero) {
        // G_D = SO(3): the class of C is decided by the low-order forms alone.
        cert.cls = map_tuple(cert.tuple.cls);
        cert.h4 = cert.strata.front();
        break;
      }
      cert.mga_applied = true;
      const SymClass order[] = {SymClass::CUBIC, SymClass::TRANSVERSE, SymClass::TETRAGONAL,
                                SymClass::TRIGONAL, SymClass::ORTHOTROPIC};
      const StratumResult* match = nullptr;
      for (SymClass s : order) {
        const StratumResult* r = find_stratum(cert.strata, s);
        if (r && r->member) {
          match = r;
          break;
        }
      }
      if (match) {
        cert.cls = match->cls;
        cert.h4 = *match;
      } else {
        // D sits below the orthotropic stratum: decide monoclinic vs
        // triclinic by testing half-turns about the eigenvectors of d2.
        Eigen::SelfAdjointEigenSolver<Mat3> es(cov.d2);
        const Mat6 kd = cert.parts.D.kelvin();
        const double dn = std::max(cert.parts.D.norm(), 1e-300);
        bool mono = false;
        for (int k = 0; k < 3 && !mono; ++k) {
          const Vec3 n = es.eigenvectors().col(k);
          const Harmonic4 Dr = cert.parts.D.rotated(Rotation::half_turn(n));
          if ((Dr.kelvin() - kd).norm() <= tol.tau_syzygy * dn) {
            mono = true;
            cert.mono_axis = n;
          }
        }
        cert.cls = mono ? SymClass::MONOCLINIC : SymClass::TRICLINIC;
        cert.h4.cls = cert.cls;
        cert.h4.note = "no invariant stratum matched; class set by direct half-turn test on the H4 part";
      }

      // Consistency of the two evidence channels under MGA.
      bool violation = false;
      if (cert.tuple.cls == TupleClass::D2 &&
          is_one_of(cert.cls, {SymClass::TRIGONAL, SymClass::TETRAGONAL, SymClass::TRANSVERSE,
                               SymClass::CUBIC}))
        violation = true;
      if (cert.tuple.cls == TupleClass::O2 && cert.cls == SymClass::CUBIC) violation = true;
      if (cert.tuple.cls == TupleClass::SO3) {
        const double r = std::abs(1.0 - 3.0 * cert.jn.j(4)) / (1.0 + 3.0 * std::abs(cert.jn.j(4)));
        if (r > tol.tau_syzygy ||
            is_one_of(cert.cls, {SymClass::TRIGONAL, SymClass::TETRAGONAL, SymClass::TRANSVERSE}))
          violation = true;
      }
      if (violation) {
        cert.mga_violation = true;
        cert.warnings.push_back(
            "MGA violation: quadratic evidence is inconsistent with the H4 class; "
            "only G_C <= G_D is guaranteed");
      }

      if (strict_mga) {
        const TupleClassResult solo = classify_tuple({cov.d2 / s2}, tol.tau_syzygy, 1.0);
        if (static_cast<int>(cert.tuple.cls) < static_cast<int>(solo.cls)) {
          cert.strict_violation = true;
          cert.warnings.push_back(
              "strict MGA check: (a, b, d2) has lower symmetry than d2 alone; "
              "the quadratic parts may cut below the H4 symmetry");
        }
      }
      break;
    }
  }

  return cert;
}

SampleParams default_params(SymClass cls) {
  SampleParams p;
  switch (cls) {
    case SymClass::CUBIC:
      p.delta = 0.9;
      break;
    case SymClass::TRANSVERSE:
      p.delta = 0.8;
      break;
    case SymClass::TRIGONAL:
      p.delta = 0.7;
      p.sigma = 0.91;
      break;
    case SymClass::TETRAGONAL:
      p.delta = 0.7;
      p.sigma = 1.96;
      break;
    case SymClass::ORTHOTROPIC:
      p.lambda3 = {1.4, -0.28, -0.84};
      break;
    case SymClass::MONOCLINIC:
      p.h = {0.4, 0.0, -0.7, 0.0, 0.0, 0.0, 0.9, -0.5, 0.3};
      break;
    case SymClass::TRICLINIC:
      p.h = {0.37, -0.21, 0.53, 0.14, -0.62, 0.45, 0.8, -0.33, 0.26};
      break;
    default:
      break;
  }
  return p;
}

namespace {

Mat3 axisym(double t) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = t;
  m(1, 1) = t;
  m(2, 2) = -2.0 * t;
  return m;
}

Mat3 diag3(double x, double y, double z) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = x;
  m(1, 1) = y;
  m(2, 2) = z;
  return m;
}

// Traceless symmetric form with e3 as eigenvector and a generic 2x2 block.
Mat3 z2_form(double x11, double x12, double x22) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = x11;
  m(0, 1) = m(1, 0) = x12;
  m(1, 1) = x22;
  m(2, 2) = -x11 - x22;
  return m;
}

}  // namespace

LowParts default_lowparts(SymClass cls, double ab_scale) {
  LowParts low;
  switch (cls) {
    case SymClass::ISOTROPIC:
    case SymClass::CUBIC:
      break;  // any anisotropic a, b would cut below O / SO(3)
    case SymClass::TRANSVERSE:
    case SymClass::TRIGONAL:
    case SymClass::TETRAGONAL:
      low.a = ab_scale * axisym(0.5);
      low.b = ab_scale * axisym(-0.3);
      break;
    case SymClass::ORTHOTROPIC:
      low.a = ab_scale * diag3(0.5, -0.2, -0.3);
      low.b = ab_scale * diag3(0.8, -0.5, -0.3);
      break;
    case SymClass::MONOCLINIC:
      low.a = ab_scale * z2_form(0.5, 0.3, -0.1);
      low.b = ab_scale * z2_form(-0.2, 0.4, 0.7);
      break;
    case SymClass::TRICLINIC: {
      Mat3 a, b;
      a << 0.5, 0.3, -0.2, 0.3, -0.1, 0.4, -0.2, 0.4, -0.4;
      b << -0.3, 0.2, 0.5, 0.2, 0.6, -0.1, 0.5, -0.1, -0.3;
      low.a = ab_scale * a;
      low.b = ab_scale * b;
      break;
    }
  }
  return low;
}

ElasticityTensor generate_sample(SymClass cls, const SampleParams& params, const Rotation& g,
                                 const LowParts& lowparts) {
  Harmonic4 D;
  switch (cls) {
    case SymClass::ISOTROPIC:
      break;
    case SymClass::CUBIC:
      D = normal_form_cubic(params.delta);
      break;
    case SymClass::TRANSVERSE:
      D = normal_form_transverse(params.delta);
      break;
    case SymClass::TRIGONAL:
      D = normal_form_trigonal(params.delta, params.sigma);
      break;
    case SymClass::TETRAGONAL:
      D = normal_form_tetragonal(params.delta, params.sigma);
      break;
    case SymClass::ORTHOTROPIC:
      D = normal_form_orthotropic(params.lambda3[0], params.lambda3[1], params.lambda3[2]);
      break;
    case SymClass::MONOCLINIC:
    case SymClass::TRICLINIC:
      D = Harmonic4::from_h(params.h);
      break;
  }
  const Ten4 T =
      recompose_full(lowparts.lambda, lowparts.mu, lowparts.a, lowparts.b, D.full());
  const ElasticityTensor C = ElasticityTensor::from_full(rotate(T, g));
  const Certificate check = classify(C);
  if (check.cls != cls) {
    throw std::invalid_argument(std::string("requested class ") + to_string(cls) +
                                " but the parameters produce class " + to_string(check.cls));
  }
  return C;
}

}  // namespace elsym
