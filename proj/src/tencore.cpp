#include "elsym/tencore.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace elsym {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Kelvin weights per Voigt slot.
const double kWeight[6] = {1.0, 1.0, 1.0, kSqrt2, kSqrt2, kSqrt2};

// Position of the (m,n) Voigt cell (m<=n) in the 21-vector.
constexpr int tri_index(int m, int n) { return m * 6 - m * (m - 1) / 2 + (n - m); }

}  // namespace

Ten4& Ten4::operator+=(const Ten4& o) {
  for (int i = 0; i < 81; ++i) v[i] += o.v[i];
  return *this;
}

Ten4& Ten4::operator-=(const Ten4& o) {
  for (int i = 0; i < 81; ++i) v[i] -= o.v[i];
  return *this;
}

Ten4& Ten4::operator*=(double t) {
  for (int i = 0; i < 81; ++i) v[i] *= t;
  return *this;
}

double Ten4::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double Ten4::frobenius_norm() const {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

Rotation Rotation::identity() { return Rotation(Mat3::Identity()); }

Rotation Rotation::from_matrix(const Mat3& g, double tol) {
  const double ortho = (g.transpose() * g - Mat3::Identity()).norm();
  const double det = g.determinant();
  if (ortho > tol || std::abs(det - 1.0) > tol) {
    std::ostringstream msg;
    msg << "invalid rotation: ||g^T g - I|| = " << ortho << ", det g = " << det;
    throw std::invalid_argument(msg.str());
  }
  return Rotation(g);
}

Rotation Rotation::from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  Mat3 g;
  g << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return Rotation(g);
}

Rotation Rotation::random(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& c : q) {
      c = gauss(rng);
      n2 += c * c;
    }
  } while (n2 < 1e-12);
  return from_quaternion(q[0], q[1], q[2], q[3]);
}

Rotation Rotation::half_turn(const Vec3& n) {
  const double nn = n.norm();
  if (nn == 0.0) throw std::invalid_argument("half_turn: zero axis");
  const Vec3 u = n / nn;
  return Rotation(2.0 * u * u.transpose() - Mat3::Identity());
}

Deviator Deviator::from_matrix(const Mat3& a, double ref_scale) {
  Mat3 s = 0.5 * (a + a.transpose());
  const double asym = (a - a.transpose()).norm();
  const double scale = std::max(s.norm(), ref_scale);
  if (asym > 1e-10 * std::max(scale, 1e-300)) {
    throw std::invalid_argument("deviator: matrix is not symmetric");
  }
  const double tr = s.trace();
  if (std::abs(tr) > 1e-10 * std::max(scale, 1e-300)) {
    std::ostringstream msg;
    msg << "deviator: trace " << tr << " exceeds 1e-10 * norm " << scale;
    throw std::invalid_argument(msg.str());
  }
  s -= (tr / 3.0) * Mat3::Identity();
  return Deviator(s);
}

Harmonic4 Harmonic4::from_h(const std::array<double, 9>& h) { return Harmonic4(h); }

Mat6 Harmonic4::kelvin() const {
  const double h1 = h_[0], h2 = h_[1], h3 = h_[2], h4 = h_[3], h5 = h_[4], h6 = h_[5],
               h7 = h_[6], h8 = h_[7], h9 = h_[8];
  Mat3 D11, D12, D22;
  D11 << -h9 - h8, h9, h8,
      h9, -h9 - h7, h7,
      h8, h7, -h8 - h7;
  D12 << -h5 - h6, h2, h1,
      h5, -h2 - h4, h3,
      h6, h4, -h1 - h3;
  D22 << h7, -h1 - h3, -h2 - h4,
      -h1 - h3, h8, -h5 - h6,
      -h2 - h4, -h5 - h6, h9;
  Mat6 K;
  K.topLeftCorner<3, 3>() = D11;
  K.topRightCorner<3, 3>() = kSqrt2 * D12;
  K.bottomLeftCorner<3, 3>() = kSqrt2 * D12.transpose();
  K.bottomRightCorner<3, 3>() = 2.0 * D22;
  return K;
}

Ten4 Harmonic4::full() const {
  const Mat6 K = kelvin();
  Mat6 c;
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n) c(m, n) = K(m, n) / (kWeight[m] * kWeight[n]);
  Ten4 T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) T(i, j, k, l) = c(voigt_index(i, j), voigt_index(k, l));
  return T;
}

Harmonic4 Harmonic4::project(const Ten4& T) {
  Mat6 c;
  for (int m = 0; m < 6; ++m) {
    const int i = kVoigtPair[m][0], j = kVoigtPair[m][1];
    for (int n = 0; n < 6; ++n) {
      const int k = kVoigtPair[n][0], l = kVoigtPair[n][1];
      c(m, n) = T(i, j, k, l);
    }
  }
  std::array<double, 9> h;
  h[0] = c(0, 5);
  h[1] = c(0, 4);
  h[2] = c(1, 5);
  h[3] = c(2, 4);
  h[4] = c(1, 3);
  h[5] = c(2, 3);
  h[6] = 0.5 * (c(1, 2) + c(3, 3));
  h[7] = 0.5 * (c(0, 2) + c(4, 4));
  h[8] = 0.5 * (c(0, 1) + c(5, 5));
  return Harmonic4(h);
}

Harmonic4 Harmonic4::from_full(const Ten4& T) {
  Harmonic4 D = project(T);
  const Ten4 R = D.full() - T;
  const double scale = T.max_abs();
  if (R.max_abs() > 1e-10 * std::max(scale, 1e-300)) {
    throw std::invalid_argument("harmonic part: tensor is not totally symmetric traceless");
  }
  return D;
}

Harmonic4 Harmonic4::rotated(const Rotation& g) const { return project(rotate(full(), g)); }

bool Harmonic4::is_zero() const {
  for (double x : h_)
    if (x != 0.0) return false;
  return true;
}

double Harmonic4::norm() const { return full().frobenius_norm(); }

ElasticityTensor ElasticityTensor::from_voigt(const Mat6& m) {
  ElasticityTensor C;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) C.c_[tri_index(i, j)] = m(i, j);
  return C;
}

ElasticityTensor ElasticityTensor::from_kelvin(const Mat6& m) {
  Mat6 c;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) c(i, j) = m(i, j) / (kWeight[i] * kWeight[j]);
  return from_voigt(c);
}

ElasticityTensor ElasticityTensor::from_full(const Ten4& T) {
  Mat6 c;
  for (int m = 0; m < 6; ++m) {
    const int i = kVoigtPair[m][0], j = kVoigtPair[m][1];
    for (int n = 0; n < 6; ++n) {
      const int k = kVoigtPair[n][0], l = kVoigtPair[n][1];
      c(m, n) = T(i, j, k, l);
    }
  }
  return from_voigt(c);
}

Mat6 ElasticityTensor::voigt() const {
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) m(i, j) = m(j, i) = c_[tri_index(i, j)];
  return m;
}

double ElasticityTensor::voigt_entry(int m, int n) const {
  return m <= n ? c_[tri_index(m, n)] : c_[tri_index(n, m)];
}

Ten4 ElasticityTensor::full() const {
  const Mat6 c = voigt();
  Ten4 T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) T(i, j, k, l) = c(voigt_index(i, j), voigt_index(k, l));
  return T;
}

KelvinMatrix kelvin_from_components(const ElasticityTensor& C) {
  const Mat6 c = C.voigt();
  Mat6 K;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) K(i, j) = c(i, j) * (kWeight[i] * kWeight[j]);
  return KelvinMatrix{K};
}

ElasticityTensor components_from_kelvin(const KelvinMatrix& K) {
  return ElasticityTensor::from_kelvin(K.m);
}

Ten4 rotate(const Ten4& T, const Rotation& g) {
  const Mat3& R = g.matrix();
  // Contract one index at a time: cost 4 * 3^5.
  Ten4 A = T, B;
  for (int pass = 0; pass < 4; ++pass) {
    B = Ten4{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            double s = 0.0;
            for (int p = 0; p < 3; ++p) s += R(l, p) * A(i, j, k, p);
            // Rotate the last index, then cycle indices so that after four
            // passes every slot has been transformed once.
            B(l, i, j, k) = s;
          }
    A = B;
  }
  return A;
}

ElasticityTensor rotate(const ElasticityTensor& C, const Rotation& g) {
  return ElasticityTensor::from_full(rotate(C.full(), g));
}

std::pair<Mat3, Mat3> dilatation_voigt(const ElasticityTensor& C) {
  const Ten4 T = C.full();
  Mat3 d = Mat3::Zero(), v = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        d(i, j) += T(k, k, i, j);
        v(i, j) += T(k, i, k, j);
      }
  return {d, v};
}

Ten4 recompose_full(double lambda, double mu, const Mat3& a, const Mat3& b, const Ten4& D) {
  const Mat3 I = Mat3::Identity();
  Ten4 T = D;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          T(i, j, k, l) += lambda * I(i, j) * I(k, l) + mu * (I(i, k) * I(j, l) + I(i, l) * I(j, k)) +
                           I(i, j) * a(k, l) + I(k, l) * a(i, j) +
                           I(i, k) * b(j, l) + I(j, l) * b(i, k) +
                           I(i, l) * b(j, k) + I(j, k) * b(i, l);
        }
  return T;
}

HarmonicDecomposition harmonic_decompose(const ElasticityTensor& C) {
  const auto [d, v] = dilatation_voigt(C);
  const double trd = d.trace(), trv = v.trace();
  const Mat3 devd = d - (trd / 3.0) * Mat3::Identity();
  const Mat3 devv = v - (trv / 3.0) * Mat3::Identity();

  HarmonicDecomposition parts;
  parts.lambda = (2.0 * trd - trv) / 15.0;
  parts.mu = (-trd + 3.0 * trv) / 30.0;
  const Mat3 a = (5.0 * devd - 4.0 * devv) / 7.0;
  const Mat3 b = (-2.0 * devd + 3.0 * devv) / 7.0;
  const double ref = d.norm() + v.norm();
  parts.a = Deviator::from_matrix(0.5 * (a + a.transpose()), ref);
  parts.b = Deviator::from_matrix(0.5 * (b + b.transpose()), ref);
  const Ten4 R =
      C.full() - recompose_full(parts.lambda, parts.mu, parts.a.matrix(), parts.b.matrix(), Ten4{});
  // The remainder is harmonic up to rounding; project rather than validate so
  // that near-isotropic inputs (remainder at noise level) decompose cleanly.
  parts.D = Harmonic4::project(R);
  return parts;
}

ElasticityTensor harmonic_recompose(const HarmonicDecomposition& parts) {
  return ElasticityTensor::from_full(recompose_full(
      parts.lambda, parts.mu, parts.a.matrix(), parts.b.matrix(), parts.D.full()));
}

}  // namespace elsym
