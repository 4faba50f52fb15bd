#include "elsym/quadstrata.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace elsym {

namespace {

constexpr double kTiny = 1e-300;

Mat3 deviator_part(const Mat3& m) {
  const Mat3 s = 0.5 * (m + m.transpose());
  return s - (s.trace() / 3.0) * Mat3::Identity();
}

struct TupleData {
  std::vector<Mat3> dev;        // deviators of all forms
  std::vector<int> sig;         // indices of significant deviators
  std::vector<double> dnorm;    // Frobenius norms of the deviators
};

TupleData prepare(const std::vector<Mat3>& forms, double tol, double ref_scale) {
  TupleData t;
  t.dev.reserve(forms.size());
  t.dnorm.reserve(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    const Mat3 d = deviator_part(forms[i]);
    t.dev.push_back(d);
    t.dnorm.push_back(d.norm());
    const double fscale = std::max(forms[i].norm(), ref_scale);
    if (t.dnorm.back() > tol * std::max(fscale, kTiny)) t.sig.push_back((int)i);
  }
  return t;
}

// Common-eigenvector test: w is an eigenvector of every significant deviator
// and parallel to every nonzero commutator axis.
bool axis_passes(const TupleData& t, double tol, const Vec3& w) {
  for (int i : t.sig) {
    const Vec3 r = (t.dev[i] * w).cross(w);
    if (r.norm() > tol * std::max(t.dnorm[i], kTiny)) return false;
  }
  for (size_t a = 0; a < t.sig.size(); ++a)
    for (size_t b = a + 1; b < t.sig.size(); ++b) {
      const int i = t.sig[a], k = t.sig[b];
      const Vec3 om = commutator_vector(t.dev[i], t.dev[k]);
      if (om.cross(w).norm() > tol * std::max(t.dnorm[i] * t.dnorm[k], kTiny)) return false;
    }
  return true;
}

std::vector<Vec3> eigenvector_candidates(const TupleData& t) {
  std::vector<Vec3> cands;
  for (int i : t.sig) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(t.dev[i]);
    for (int c = 0; c < 3; ++c) cands.push_back(es.eigenvectors().col(c));
  }
  return cands;
}

}  // namespace

const char* to_string(TupleClass c) {
  switch (c) {
    case TupleClass::TRIV: return "triv";
    case TupleClass::Z2: return "Z2";
    case TupleClass::D2: return "D2";
    case TupleClass::O2: return "O2";
    case TupleClass::SO3: return "SO3";
  }
  return "?";
}

Vec3 commutator_vector(const Mat3& a, const Mat3& b) {
  const Mat3 m = a * b - b * a;
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

HermiteResult hermite_distinct_roots(double s1, double s2, double s3, double band) {
  HermiteResult r;
  r.delta2 = 2.0 * s1 * s1 - 6.0 * s2;
  r.delta3 = -27.0 * s3 * s3 + (18.0 * s1 * s2 - 4.0 * s1 * s1 * s1) * s3 -
             4.0 * s2 * s2 * s2 + s1 * s1 * s2 * s2;
  r.all_real = r.delta3 >= -band;
  if (r.delta3 > band)
    r.distinct_roots = 3;
  else if (std::abs(r.delta3) <= band && r.delta2 > band)
    r.distinct_roots = 2;
  else
    r.distinct_roots = 1;
  return r;
}

TupleClassResult classify_tuple(const std::vector<Mat3>& forms, double tol, double ref_scale) {
  const TupleData t = prepare(forms, tol, ref_scale);
  TupleClassResult out;

  if (t.sig.empty()) {
    out.cls = TupleClass::SO3;
    return out;
  }

  // O2: every significant deviator has a repeated eigenvalue
  // (t2^3 = 6 t3^2, written as 9 t2^3 = 54 t3^2) and all pairs are aligned
  // (Cauchy-Schwarz equality).
  bool o2 = true;
  for (int i : t.sig) {
    const Mat3& d = t.dev[i];
    const double t2 = (d * d).trace();
    const double t3 = (d * d * d).trace();
    if (std::abs(9.0 * t2 * t2 * t2 - 54.0 * t3 * t3) >
        tol * std::max(9.0 * t2 * t2 * t2, kTiny)) {
      o2 = false;
      break;
    }
  }
  if (o2) {
    for (size_t a = 0; a < t.sig.size() && o2; ++a)
      for (size_t b = a + 1; b < t.sig.size() && o2; ++b) {
        const Mat3& di = t.dev[t.sig[a]];
        const Mat3& dk = t.dev[t.sig[b]];
        const double lhs = (di * dk).trace();
        const double rhs = (di * di).trace() * (dk * dk).trace();
        if (std::abs(lhs * lhs - rhs) > tol * std::max(rhs, kTiny)) o2 = false;
      }
  }
  if (o2) {
    out.cls = TupleClass::O2;
    // Axis = eigenvector of the simple eigenvalue of the first significant
    // deviator.
    Eigen::SelfAdjointEigenSolver<Mat3> es(t.dev[t.sig[0]]);
    const auto& ev = es.eigenvalues();
    const int simple = (ev[1] - ev[0] > ev[2] - ev[1]) ? 0 : 2;
    out.omega = es.eigenvectors().col(simple);
    return out;
  }

  // D2: all pairwise commutators vanish.
  bool d2 = true;
  std::vector<Vec3> nonzero_commutators;
  for (size_t a = 0; a < t.sig.size(); ++a)
    for (size_t b = a + 1; b < t.sig.size(); ++b) {
      const int i = t.sig[a], k = t.sig[b];
      const Vec3 om = commutator_vector(t.dev[i], t.dev[k]);
      if (om.norm() > tol * std::max(t.dnorm[i] * t.dnorm[k], kTiny)) {
        d2 = false;
        nonzero_commutators.push_back(om.normalized());
      }
    }
  if (d2) {
    out.cls = TupleClass::D2;
    for (const Vec3& w : eigenvector_candidates(t)) {
      if (axis_passes(t, tol, w)) {
        out.omega = w;
        break;
      }
    }
    return out;
  }

  // Z2: some direction is a common eigenvector. Nonzero commutator axes are
  // the natural candidates; fall back to eigenvector enumeration.
  std::vector<Vec3> cands = nonzero_commutators;
  if (cands.empty()) cands = eigenvector_candidates(t);
  for (const Vec3& w : cands) {
    if (axis_passes(t, tol, w)) {
      out.cls = TupleClass::Z2;
      out.omega = w;
      return out;
    }
  }
  out.cls = TupleClass::TRIV;
  return out;
}

bool cowin_mehrabadi(const ElasticityTensor& C, const Vec3& n, double tol) {
  const double nn = n.norm();
  if (nn < 1e-12) throw std::invalid_argument("cowin_mehrabadi: zero normal vector");
  const Vec3 u = n / nn;

  const auto [d, v] = dilatation_voigt(C);
  if ((d * u).cross(u).norm() > tol * std::max(d.norm(), kTiny)) return false;
  if ((v * u).cross(u).norm() > tol * std::max(v.norm(), kTiny)) return false;

  const Ten4 T = C.full();
  const double sc = std::max(T.max_abs(), kTiny);

  Vec3 w3 = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) w3[i] += T(i, j, k, l) * u[j] * u[k] * u[l];
  if (w3.cross(u).norm() > tol * sc) return false;

  const Vec3 tax = std::abs(u[0]) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
  const Vec3 m1 = u.cross(tax).normalized();
  const Vec3 m2 = u.cross(m1);
  for (const Vec3& m : {m1, m2}) {
    Vec3 wm = Vec3::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) wm[i] += T(i, j, k, l) * u[j] * m[k] * m[l];
    if (wm.cross(u).norm() > tol * sc) return false;
  }
  return true;
}

}  // namespace elsym
