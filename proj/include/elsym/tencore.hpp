#pragma once

#include <Eigen/Dense>
#include <array>
#include <random>
#include <utility>

namespace elsym {

using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec3 = Eigen::Vector3d;

// Voigt pair order: 0:(0,0) 1:(1,1) 2:(2,2) 3:(1,2) 4:(0,2) 5:(0,1)
inline constexpr int kVoigtPair[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};

// Index recoding alpha(i,i)=i, alpha(i,j)=9-(i+j) in 1-based indices.
constexpr int voigt_index(int i, int j) { return i == j ? i : 6 - (i + j); }

// Dense 3x3x3x3 tensor, row-major.
struct Ten4 {
  std::array<double, 81> v{};

  double& operator()(int i, int j, int k, int l) { return v[((i * 3 + j) * 3 + k) * 3 + l]; }
  double operator()(int i, int j, int k, int l) const { return v[((i * 3 + j) * 3 + k) * 3 + l]; }

  Ten4& operator+=(const Ten4& o);
  Ten4& operator-=(const Ten4& o);
  Ten4& operator*=(double t);
  friend Ten4 operator+(Ten4 a, const Ten4& b) { return a += b; }
  friend Ten4 operator-(Ten4 a, const Ten4& b) { return a -= b; }
  friend Ten4 operator*(double t, Ten4 a) { return a *= t; }

  double max_abs() const;
  double frobenius_norm() const;
};

class Rotation {
 public:
  static Rotation identity();
  // Validates g^T g = I and det g = +1 to tolerance; throws std::invalid_argument.
  static Rotation from_matrix(const Mat3& g, double tol = 1e-10);
  static Rotation from_quaternion(double w, double x, double y, double z);
  // Uniform over SO(3) via normalized quaternion.
  static Rotation random(std::mt19937_64& rng);
  // Rotation by pi about axis n (acts as the reflection through the plane
  // normal to n on even-order tensors).
  static Rotation half_turn(const Vec3& n);

  const Mat3& matrix() const { return g_; }

 private:
  explicit Rotation(const Mat3& g) : g_(g) {}
  Mat3 g_;
};

// Symmetric traceless 3x3 matrix (element of H^2).
class Deviator {
 public:
  Deviator() : m_(Mat3::Zero()) {}
  // Symmetrizes and re-projects a small trace (|tr| <= 1e-10 * the larger of
  // ||a|| and ref_scale); larger violations throw std::invalid_argument.
  // ref_scale lets callers validate near-zero deviators derived from
  // larger quantities.
  static Deviator from_matrix(const Mat3& a, double ref_scale = 0.0);
  static Deviator zero() { return Deviator(); }

  const Mat3& matrix() const { return m_; }
  double norm() const { return m_.norm(); }

 private:
  explicit Deviator(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

// Element of H^4 parametrized by (h1..h9); the Kelvin matrix view is built
// from the D11/D12/D22 blocks.
class Harmonic4 {
 public:
  Harmonic4() : h_{} {}
  static Harmonic4 from_h(const std::array<double, 9>& h);
  // Accepts a totally symmetric traceless tensor; deviation beyond
  // 1e-10 * ||T|| throws std::invalid_argument.
  static Harmonic4 from_full(const Ten4& T);
  // Extracts the harmonic component without validating the remainder.
  static Harmonic4 project(const Ten4& T);

  const std::array<double, 9>& h() const { return h_; }
  Mat6 kelvin() const;
  Ten4 full() const;
  Harmonic4 rotated(const Rotation& g) const;
  bool is_zero() const;
  double norm() const;  // Frobenius norm of the full tensor

 private:
  explicit Harmonic4(const std::array<double, 9>& h) : h_(h) {}
  std::array<double, 9> h_;
};

struct HarmonicDecomposition {
  double lambda = 0.0;
  double mu = 0.0;
  Deviator a;
  Deviator b;
  Harmonic4 D;
};

// 21 independent stiffness components; canonical storage is the Voigt upper
// triangle, row-major: (0,0)..(0,5),(1,1)..(1,5),...,(5,5).
class ElasticityTensor {
 public:
  ElasticityTensor() : c_{} {}
  static ElasticityTensor from_voigt(const Mat6& m);  // reads the upper triangle
  static ElasticityTensor from_kelvin(const Mat6& m);
  static ElasticityTensor from_full(const Ten4& T);

  Mat6 voigt() const;
  Ten4 full() const;
  const std::array<double, 21>& components() const { return c_; }
  double voigt_entry(int m, int n) const;

 private:
  std::array<double, 21> c_;
};

struct KelvinMatrix {
  Mat6 m;
};

KelvinMatrix kelvin_from_components(const ElasticityTensor& C);
ElasticityTensor components_from_kelvin(const KelvinMatrix& K);

Ten4 rotate(const Ten4& T, const Rotation& g);
ElasticityTensor rotate(const ElasticityTensor& C, const Rotation& g);

// d_ij = sum_k C_kkij (dilatation), v_ij = sum_k C_kikj (Voigt).
std::pair<Mat3, Mat3> dilatation_voigt(const ElasticityTensor& C);

HarmonicDecomposition harmonic_decompose(const ElasticityTensor& C);
ElasticityTensor harmonic_recompose(const HarmonicDecomposition& parts);

// Full-tensor assembly of lambda*dd + mu*(dd+dd) + d(x)a + a(x)d + b-terms + D.
Ten4 recompose_full(double lambda, double mu, const Mat3& a, const Mat3& b, const Ten4& D);

}  // namespace elsym
