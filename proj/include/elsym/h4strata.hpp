#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elsym/invariants.hpp"
#include "elsym/tencore.hpp"

namespace elsym {

// The eight symmetry classes, shared by H4 tensors and elasticity tensors.
enum class SymClass {
  TRICLINIC,
  MONOCLINIC,
  ORTHOTROPIC,
  TRIGONAL,
  TETRAGONAL,
  TRANSVERSE,
  CUBIC,
  ISOTROPIC
};

const char* to_string(SymClass c);

struct StratumResult {
  SymClass cls = SymClass::TRICLINIC;
  // member: closed-stratum residuals pass AND strictness, inequality and
  // reality guards hold (the open stratum, up to tolerance).
  bool member = false;
  // closed_member: the syzygy residuals alone pass (closure of the stratum).
  bool closed_member = false;
  bool reality_failure = false;
  // False when a recovery denominator vanishes (stratum boundary).
  bool recovery_available = true;
  std::vector<double> syzygy_residuals;      // scale-free, on normalized jk
  std::vector<double> inequality_margins;    // signed, nonnegative inside
  std::vector<double> slice_params;          // (delta), (delta,sigma), (l1,l2,l3)
  std::vector<std::pair<std::string, bool>> genericity_flags;
  std::string note;
};

StratumResult test_isotropic(const InvariantVector& J, double tol = 1e-8, double scale = 1.0,
                             double tau_zero = 1e-10);
StratumResult test_cubic(const InvariantVector& J, double tol = 1e-8);
StratumResult test_transverse(const InvariantVector& J, double tol = 1e-8);
StratumResult test_trigonal(const InvariantVector& J, double tol = 1e-8);
StratumResult test_tetragonal(const InvariantVector& J, double tol = 1e-8);
StratumResult test_orthotropic(const InvariantVector& J, double tol = 1e-8);

// Up-lattice degeneration conditions. For every class whose closed stratum
// the invariants satisfy (and whose recovery is defined), the residuals of
// the transitions out of it are listed, sorted ascending. When no class
// matches, nearest-family hints ("->trigonal", ...) are returned instead,
// keyed by each family's worst residual. Isotropic input yields an empty
// list.
std::vector<std::pair<std::string, double>> bifurcation_path(const InvariantVector& J,
                                                             double tol = 1e-8,
                                                             double scale = 1.0,
                                                             double tau_zero = 1e-10);

// Builds the class normal form from the recovered slice parameters. Throws
// std::invalid_argument for non-member results and for classes without a
// finite-monodromy normal form (triclinic, monoclinic).
Harmonic4 reconstruct_normal_form(const StratumResult& r);

// Normal-form slices: sigma >= 0 is the canonical D3/D4 representative,
// lambdas are sorted descending for D2.
Harmonic4 normal_form_cubic(double delta);
Harmonic4 normal_form_transverse(double delta);
Harmonic4 normal_form_trigonal(double delta, double sigma);
Harmonic4 normal_form_tetragonal(double delta, double sigma);
Harmonic4 normal_form_orthotropic(double l1, double l2, double l3);

// Closed-form invariants along each slice; sigma enters through sigma^2, so
// negative `sigma_sq` gives the analytic continuation used to build
// inequality counterexamples.
InvariantVector cubic_parametric(double delta);
InvariantVector transverse_parametric(double delta);
InvariantVector trigonal_parametric(double delta, double sigma_sq);
InvariantVector tetragonal_parametric(double delta, double sigma_sq);
InvariantVector orthotropic_parametric(double s1, double s2, double s3);

}  // namespace elsym
