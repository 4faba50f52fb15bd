#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "elsym/h4strata.hpp"
#include "elsym/invariants.hpp"
#include "elsym/quadstrata.hpp"
#include "elsym/tencore.hpp"

namespace elsym {

// One knob family; syzygy residuals, zero tests and rotation checks have
// separate scales.
struct ToleranceProfile {
  double tau_syzygy = 1e-8;
  double tau_zero = 1e-10;
  double tau_rot = 1e-10;
};

// Everything classify() looked at, so a verdict can be audited: the branch
// taken, the quadratic-tuple evidence, the Cowin-Mehrabadi outcome, the full
// stratum residual tables and the recovered slice parameters.
struct Certificate {
  std::string digest;
  SymClass cls = SymClass::TRICLINIC;
  double scale = 1.0;  // Kelvin Frobenius norm used to normalize evidence
  HarmonicDecomposition parts;
  TupleClassResult tuple;  // of L = (a, b, d2(D)), prescaled
  bool cm_run = false;
  bool cm_result = false;
  Vec3 cm_axis = Vec3::Zero();
  bool d_zero = false;  // H4 part numerically zero relative to scale
  InvariantVector J;
  NormalizedInvariants jn;  // defined only when !d_zero
  bool have_jn = false;
  bool mga_applied = false;
  bool mga_violation = false;
  bool strict_mga = false;  // strict cross-check requested
  bool strict_violation = false;
  Vec3 mono_axis = Vec3::Zero();  // half-turn axis when the fallback fires
  std::vector<StratumResult> strata;  // all tested strata (only the isotropic
                                      // test when d_zero)
  StratumResult h4;                   // the stratum backing the verdict
  std::vector<std::pair<std::string, double>> bifurcation;
  std::vector<std::string> warnings;
  ToleranceProfile tol;
};

Certificate classify(const ElasticityTensor& C, const ToleranceProfile& tol = {},
                     bool strict_mga = false);

// FNV-1a over the 21 canonical components (signed zeros normalized), hex.
std::string digest_of(const ElasticityTensor& C);

// Slice parameters for generate_sample; only the fields relevant to the
// requested class are read.
struct SampleParams {
  double delta = 0.0;
  double sigma = 0.0;
  std::array<double, 3> lambda3{0.0, 0.0, 0.0};
  std::array<double, 9> h{};
};

// Isotropic part plus the two quadratic deviators, aligned with the normal
// form frame.
struct LowParts {
  double lambda = 2.0;
  double mu = 1.0;
  Mat3 a = Mat3::Zero();
  Mat3 b = Mat3::Zero();
};

SampleParams default_params(SymClass cls);
LowParts default_lowparts(SymClass cls, double ab_scale = 1.0);

// Builds the class normal form in Ela, rotates it by g, and verifies its own
// output: if the assembled tensor classifies to a different class (degenerate
// parameters), throws std::invalid_argument naming the class actually
// produced.
ElasticityTensor generate_sample(SymClass cls, const SampleParams& params, const Rotation& g,
                                 const LowParts& lowparts);

}  // namespace elsym
