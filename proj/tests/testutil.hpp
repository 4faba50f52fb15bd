#pragma once

#include <cmath>
#include <random>

#include "elsym/classifier.hpp"

namespace testutil {

using namespace elsym;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double rand_sign(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? 1.0 : -1.0;
}

// Class parameters drawn from windows bounded away from every degeneracy
// (equal roots, sigma = 0, the D3/D4 coincidence loci sigma^2 = 50 delta^2
// and sigma^2 = 25 delta^2).
inline SampleParams random_params(SymClass cls, std::mt19937_64& rng) {
  SampleParams p = default_params(cls);
  const double delta = rand_sign(rng) * uniform(rng, 0.5, 1.5);
  switch (cls) {
    case SymClass::CUBIC:
    case SymClass::TRANSVERSE:
      p.delta = delta;
      break;
    case SymClass::TRIGONAL:
      p.delta = delta;
      p.sigma = std::abs(delta) * uniform(rng, 0.8, 1.8);
      break;
    case SymClass::TETRAGONAL:
      p.delta = delta;
      p.sigma = std::abs(delta) * uniform(rng, 2.2, 3.5);
      break;
    case SymClass::ORTHOTROPIC: {
      const double s = rand_sign(rng) * uniform(rng, 0.5, 2.0);
      double l[3] = {1.0, uniform(rng, -0.35, -0.05), uniform(rng, -0.75, -0.45)};
      const int shift = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int k = 0; k < 3; ++k) p.lambda3[k] = s * l[(k + shift) % 3];
      break;
    }
    case SymClass::MONOCLINIC:
      for (int k : {0, 2, 6, 7, 8}) p.h[k] = rand_sign(rng) * uniform(rng, 0.3, 1.0);
      break;
    case SymClass::TRICLINIC:
      for (int k = 0; k < 9; ++k) p.h[k] = rand_sign(rng) * uniform(rng, 0.3, 1.0);
      break;
    default:
      break;
  }
  return p;
}

inline ElasticityTensor random_sample(SymClass cls, std::mt19937_64& rng) {
  const SampleParams p = random_params(cls, rng);
  const Rotation g = Rotation::random(rng);
  return generate_sample(cls, p, g, default_lowparts(cls));
}

// Per-component relative perturbation; exact zeros stay zero, so the noise
// cannot create couplings the material does not have.
inline ElasticityTensor noisy(const ElasticityTensor& C, double rel, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat6 m = C.voigt();
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      m(i, j) *= 1.0 + rel * gauss(rng);
      m(j, i) = m(i, j);
    }
  return ElasticityTensor::from_voigt(m);
}

}  // namespace testutil
