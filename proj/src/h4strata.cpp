#include "elsym/h4strata.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <stdexcept>

#include "elsym/quadstrata.hpp"

namespace elsym {

namespace {

// Residual of a homogeneous relation written as a list of signed terms:
// |sum| over max(1, sum of |terms|).
double relation_residual(std::initializer_list<double> terms) {
  double s = 0.0, a = 0.0;
  for (double t : terms) {
    s += t;
    a += std::abs(t);
  }
  return std::abs(s) / std::max(1.0, a);
}

struct J10 {
  double j2, j3, j4, j5, j6, j7, j8, j9, j10;
};

J10 unpack(const NormalizedInvariants& n) {
  return {n.j(2), n.j(3), n.j(4), n.j(5), n.j(6), n.j(7), n.j(8), n.j(9), n.j(10)};
}

std::vector<double> family_cubic(const J10& x) {
  const auto [j2, j3, j4, j5, j6, j7, j8, j9, j10] = x;
  return {relation_residual({3 * j4, -j2 * j2}),
          relation_residual({j5}),
          relation_residual({30 * j3 * j3, -j2 * j2 * j2}),
          relation_residual({9 * j6, -j2 * j2 * j2}),
          relation_residual({j7}),
          relation_residual({j8}),
          relation_residual({j9}),
          relation_residual({j10})};
}

std::vector<double> family_transverse(const J10& x) {
  const auto [j2, j3, j4, j5, j6, j7, j8, j9, j10] = x;
  const double j2p2 = j2 * j2, j2p3 = j2p2 * j2, j2p4 = j2p3 * j2, j2p5 = j2p4 * j2;
  return {relation_residual({98 * j4, -41 * j2p2}),
          relation_residual({63 * j5, -25 * j3 * j2}),
          relation_residual({3430 * j3 * j3, -81 * j2p3}),
          relation_residual({1372 * j6, -283 * j2p3}),
          relation_residual({882 * j7, -275 * j2p2 * j3}),
          relation_residual({4802 * j8, -165 * j2p4}),
          relation_residual({12348 * j9, -3025 * j2p3 * j3}),
          relation_residual({67228 * j10, -1815 * j2p5})};
}

std::vector<double> family_trigonal(const J10& x) {
  const auto [j2, j3, j4, j5, j6, j7, j8, j9, j10] = x;
  const double j2p2 = j2 * j2, j2p3 = j2p2 * j2, j2p4 = j2p3 * j2, j2p5 = j2p4 * j2;
  const double j3p2 = j3 * j3, j3p3 = j3p2 * j3;
  return {relation_residual({192 * j6, 51 * j2p3, -216 * j2 * j4, -10 * j3p2}),
          relation_residual({36 * j7, 2 * j2p2 * j3, -6 * j3 * j4, -27 * j2 * j5}),
          relation_residual(
              {768 * j4 * j4, 99 * j2p4, -552 * j2p2 * j4, -10 * j2 * j3p2, -240 * j3 * j5}),
          relation_residual(
              {240 * j8, 33 * j2p4, -96 * j2p2 * j4, -30 * j2 * j3p2, -40 * j3 * j5}),
          relation_residual({576 * j4 * j5, 41 * j2p3 * j3, -120 * j2 * j3 * j4,
                             -216 * j2p2 * j5, -30 * j3p3}),
          relation_residual(
              {1152 * j9, 99 * j2p3 * j3, -296 * j2 * j3 * j4, -648 * j2p2 * j5, -10 * j3p3}),
          relation_residual({1440 * j5 * j5, 11 * j2p5, -32 * j2p3 * j4, 70 * j2p2 * j3p2,
                             -240 * j2 * j3 * j5, -240 * j3p2 * j4}),
          relation_residual({8640 * j10, 891 * j2p5, -2592 * j2p3 * j4, -730 * j2p2 * j3p2,
                             -2160 * j2 * j3 * j5, -240 * j3p2 * j4})};
}

std::vector<double> family_tetragonal(const J10& x) {
  const auto [j2, j3, j4, j5, j6, j7, j8, j9, j10] = x;
  const double j2p2 = j2 * j2, j2p3 = j2p2 * j2, j2p4 = j2p3 * j2, j2p5 = j2p4 * j2;
  const double j3p2 = j3 * j3, j3p3 = j3p2 * j3;
  return {relation_residual({6 * j6, 3 * j2p3, -9 * j2 * j4, -20 * j3p2}),
          relation_residual({3 * j7, -j2p2 * j3, 3 * j3 * j4, -3 * j2 * j5}),
          relation_residual(
              {6 * j4 * j4, 3 * j2p4, -9 * j2p2 * j4, -20 * j2 * j3p2, 20 * j3 * j5}),
          relation_residual({5 * j8, 3 * j2p4, -6 * j2p2 * j4, -30 * j2 * j3p2, 5 * j3 * j5}),
          relation_residual({3 * j4 * j5, -7 * j2p3 * j3, 15 * j2 * j3 * j4, -3 * j2p2 * j5,
                             60 * j3p3}),
          relation_residual(
              {6 * j9, -5 * j2p3 * j3, 13 * j2 * j3 * j4, -6 * j2p2 * j5, 20 * j3p3}),
          relation_residual({5 * j5 * j5, 2 * j2p5, -4 * j2p3 * j4, -10 * j2p2 * j3p2,
                             20 * j2 * j3 * j5, -30 * j3p2 * j4}),
          relation_residual({15 * j10, 9 * j2p5, -18 * j2p3 * j4, -85 * j2p2 * j3p2,
                             30 * j2 * j3 * j5, -15 * j3p2 * j4})};
}

std::vector<double> family_orthotropic(const J10& x) {
  const auto [j2, j3, j4, j5, j6, j7, j8, j9, j10] = x;
  const double j2p2 = j2 * j2, j2p3 = j2p2 * j2, j2p4 = j2p3 * j2, j2p5 = j2p4 * j2,
               j2p6 = j2p5 * j2, j2p7 = j2p6 * j2;
  const double j3p2 = j3 * j3, j3p3 = j3p2 * j3, j3p4 = j3p3 * j3;
  const double j4p2 = j4 * j4, j4p3 = j4p2 * j4;
  return {
      relation_residual({-1350 * j3 * j7, -840 * j4 * j6, 465 * j2p2 * j6, 270 * j5 * j5,
                         720 * j2 * j3 * j5, 747 * j2 * j4p2, -170 * j3p2 * j4, -564 * j2p3 * j4,
                         70 * j2p2 * j3p2, 84 * j2p5}),
      relation_residual({-1620 * j4 * j7, 810 * j2p2 * j7, 360 * j5 * j6, -1110 * j2 * j3 * j6,
                         999 * j2 * j4 * j5, 960 * j3p2 * j5, -549 * j2p3 * j5, -972 * j3 * j4p2,
                         1638 * j2p2 * j3 * j4, -80 * j2 * j3p3, -312 * j2p4 * j3}),
      relation_residual({4050 * j5 * j7, -25650 * j2 * j3 * j7, -14310 * j2 * j4 * j6,
                         9600 * j3p2 * j6, 7965 * j2p3 * j6, 9450 * j3 * j4 * j5,
                         10530 * j2p2 * j3 * j5, 1134 * j4p3, 11259 * j2p2 * j4p2,
                         -12330 * j2 * j3p2 * j4, -9018 * j2p4 * j4, 400 * j3p4,
                         3270 * j2p3 * j3p2, 1350 * j2p6}),
      relation_residual({-12150 * j2 * j3 * j7, 3600 * j6 * j6, -11610 * j2 * j4 * j6,
                         9750 * j3p2 * j6, 4410 * j2p3 * j6, 8505 * j3 * j4 * j5,
                         3645 * j2p2 * j3 * j5, 1458 * j4p3, 5670 * j2p2 * j4p2,
                         -10710 * j2 * j3p2 * j4, -4104 * j2p4 * j4, 400 * j3p4,
                         2580 * j2p3 * j3p2, 576 * j2p6}),
      relation_residual({1800 * j6 * j7, -10800 * j2 * j4 * j7, 4800 * j3p2 * j7,
                         4950 * j2p3 * j7, 4020 * j3 * j4 * j6, -8370 * j2p2 * j3 * j6,
                         162 * j4p2 * j5, 7371 * j2p2 * j4 * j5, 2880 * j2 * j3p2 * j5,
                         -3483 * j2p4 * j5, -9216 * j2 * j3 * j4p2, 640 * j3p3 * j4,
                         11946 * j2p3 * j3 * j4, -720 * j2p2 * j3p3, -2160 * j2p5 * j3}),
      relation_residual({60750 * j7 * j7, 178200 * j3 * j4 * j7, -546750 * j2p2 * j3 * j7,
                         3780 * j4p2 * j6, -246780 * j2p2 * j4 * j6, 348000 * j2 * j3p2 * j6,
                         137025 * j2p4 * j6, 116640 * j2 * j3 * j4 * j5, -75600 * j3p3 * j5,
                         223560 * j2p3 * j3 * j5, 29808 * j2 * j4p3, 82170 * j3p2 * j4p2,
                         177660 * j2p3 * j4p2, -438390 * j2p2 * j3p2 * j4, -148014 * j2p5 * j4,
                         17200 * j2 * j3p4, 102000 * j2p4 * j3p2, 22221 * j2p7})};
}

bool all_below(const std::vector<double>& r, double tol) {
  for (double x : r)
    if (!(x <= tol)) return false;
  return true;
}

double max_of(const std::vector<double>& r) {
  double m = 0.0;
  for (double x : r) m = std::max(m, x);
  return m;
}

// sigma_k of the recovered orthotropic cubic on normalized invariants.
// Defined when the discriminant combination dsc_n is away from zero.
struct OrthoRecovery {
  bool available = false;
  double dsc = 0.0;  // 6 j6 - 9 j4 - 20 j3^2 + 3, equals 432 * discriminant
  double num = 0.0;  // 3 j7 - 3 j5 + 3 j3 j4 - j3
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

OrthoRecovery ortho_recover(const J10& x) {
  OrthoRecovery r;
  r.dsc = 6 * x.j6 - 9 * x.j2 * x.j4 - 20 * x.j3 * x.j3 + 3 * x.j2 * x.j2 * x.j2;
  r.num = 3 * x.j7 - 3 * x.j2 * x.j5 + 3 * x.j3 * x.j4 - x.j2 * x.j2 * x.j3;
  if (std::abs(r.dsc) <= 1e-12) return r;
  r.available = true;
  r.s1 = -9.0 * r.num / (2.0 * r.dsc);
  r.s2 = (4.0 / 7.0) * r.s1 * r.s1 - x.j2 / 14.0;
  r.s3 = x.j3 / 24.0 + r.s1 * r.s1 * r.s1 / 7.0 - r.s1 * x.j2 / 56.0;
  return r;
}

// Roots of z^3 - s1 z^2 + s2 z - s3, sorted descending, via the companion
// matrix (robust near multiple roots).
std::array<double, 3> cubic_roots_desc(double s1, double s2, double s3) {
  Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
  comp(1, 0) = 1.0;
  comp(2, 1) = 1.0;
  comp(0, 2) = s3;
  comp(1, 2) = -s2;
  comp(2, 2) = s1;
  Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
  std::array<double, 3> roots{es.eigenvalues()[0].real(), es.eigenvalues()[1].real(),
                              es.eigenvalues()[2].real()};
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

NormalizedInvariants safe_normalize(const InvariantVector& J) {
  return normalize(J, 1.0, 1e-10);
}

bool j2_usable(const InvariantVector& J) { return J.J(2) > 1e-20; }

StratumResult empty_result(SymClass cls, const char* note) {
  StratumResult r;
  r.cls = cls;
  r.note = note;
  return r;
}

}  // namespace

const char* to_string(SymClass c) {
  switch (c) {
    case SymClass::TRICLINIC: return "triclinic";
    case SymClass::MONOCLINIC: return "monoclinic";
    case SymClass::ORTHOTROPIC: return "orthotropic";
    case SymClass::TRIGONAL: return "trigonal";
    case SymClass::TETRAGONAL: return "tetragonal";
    case SymClass::TRANSVERSE: return "transverse";
    case SymClass::CUBIC: return "cubic";
    case SymClass::ISOTROPIC: return "isotropic";
  }
  return "?";
}

StratumResult test_isotropic(const InvariantVector& J, double tol, double scale,
                             double tau_zero) {
  (void)tol;
  StratumResult r;
  r.cls = SymClass::ISOTROPIC;
  const double s = scale > 0.0 ? scale : 1.0;
  const double eps = (tau_zero * s) * (tau_zero * s);
  r.syzygy_residuals = {J.J(2) / (s * s)};
  r.member = r.closed_member = J.J(2) <= eps;
  return r;
}

StratumResult test_cubic(const InvariantVector& J, double tol) {
  if (!j2_usable(J)) return empty_result(SymClass::CUBIC, "zero invariants");
  StratumResult r;
  r.cls = SymClass::CUBIC;
  const J10 x = unpack(safe_normalize(J));
  r.syzygy_residuals = family_cubic(x);
  r.closed_member = all_below(r.syzygy_residuals, tol);
  r.genericity_flags = {{"J2 != 0", true}};
  r.slice_params = {J.J(3) / (4.0 * J.J(2))};
  r.member = r.closed_member;
  return r;
}

StratumResult test_transverse(const InvariantVector& J, double tol) {
  if (!j2_usable(J)) return empty_result(SymClass::TRANSVERSE, "zero invariants");
  StratumResult r;
  r.cls = SymClass::TRANSVERSE;
  const J10 x = unpack(safe_normalize(J));
  r.syzygy_residuals = family_transverse(x);
  r.closed_member = all_below(r.syzygy_residuals, tol);
  r.genericity_flags = {{"J2 != 0", true}};
  r.slice_params = {7.0 * J.J(3) / (18.0 * J.J(2))};
  r.member = r.closed_member;
  return r;
}

namespace {

// Shared D3/D4 scaffolding: delta from J5/(J2^2 - 3 J4), sigma from the
// degree-2 slice relation J2 = 280 delta^2 + c sigma^2, reality and
// inequality guards, genericity flags.
StratumResult dihedral_test(const InvariantVector& J, double tol, SymClass cls,
                            std::vector<double> residuals, double sigma_div,
                            const char* extra_flag_name, double extra_flag_margin) {
  StratumResult r;
  r.cls = cls;
  r.syzygy_residuals = std::move(residuals);
  r.closed_member = all_below(r.syzygy_residuals, tol);

  const NormalizedInvariants n = safe_normalize(J);
  const J10 x = unpack(n);
  const double den = 1.0 - 3.0 * x.j4;  // (J2^2 - 3 J4) / J2^2
  const bool strict1 = std::abs(den) > tol;
  const bool strict2 = std::abs(extra_flag_margin) > tol;
  r.genericity_flags = {{"3J4 - J2^2 != 0", strict1}, {extra_flag_name, strict2}};

  // Inequality 2 J2 (J2^2 - 3 J4)^2 - 35 J5^2 >= 0, scaled by J2^5.
  const double ineq = 2.0 * den * den - 35.0 * x.j5 * x.j5;
  r.inequality_margins = {ineq};

  if (strict1) {
    const double dhat = -x.j5 / (4.0 * den);
    const double s2hat = (1.0 - 280.0 * dhat * dhat) / sigma_div;
    const double sq = std::sqrt(J.J(2));
    if (s2hat < -tol) {
      r.reality_failure = true;
      r.note = "sigma^2 recovered negative: not a real slice point";
    } else {
      const double shat = std::sqrt(std::max(0.0, s2hat));
      r.slice_params = {dhat * sq, shat * sq};
    }
  } else {
    r.recovery_available = false;
    r.note = "delta recovery undefined (J2^2 - 3 J4 ~ 0); use higher-symmetry tests";
  }

  r.member = r.closed_member && strict1 && strict2 && !r.reality_failure &&
             ineq >= -tol && r.recovery_available;
  return r;
}

}  // namespace

StratumResult test_trigonal(const InvariantVector& J, double tol) {
  if (!j2_usable(J)) return empty_result(SymClass::TRIGONAL, "zero invariants");
  const J10 x = unpack(safe_normalize(J));
  return dihedral_test(J, tol, SymClass::TRIGONAL, family_trigonal(x), 16.0,
                       "98J4 - 41J2^2 != 0", (98.0 * x.j4 - 41.0) / 41.0);
}

StratumResult test_tetragonal(const InvariantVector& J, double tol) {
  if (!j2_usable(J)) return empty_result(SymClass::TETRAGONAL, "zero invariants");
  const J10 x = unpack(safe_normalize(J));
  return dihedral_test(J, tol, SymClass::TETRAGONAL, family_tetragonal(x), 8.0,
                       "5J2^3 - 8J2J4 - 70J3^2 != 0",
                       (5.0 - 8.0 * x.j4 - 70.0 * x.j3 * x.j3) / 5.0);
}

StratumResult test_orthotropic(const InvariantVector& J, double tol) {
  if (!j2_usable(J)) return empty_result(SymClass::ORTHOTROPIC, "zero invariants");
  StratumResult r;
  r.cls = SymClass::ORTHOTROPIC;
  const J10 x = unpack(safe_normalize(J));
  r.syzygy_residuals = family_orthotropic(x);

  const OrthoRecovery rec = ortho_recover(x);
  // Margins: the discriminant combination (= 432 * Delta3 of the recovered
  // cubic) and N2 = 6 J2 dsc^2 - 405 num^2 (= 14 Delta2 dsc^2), both scaled
  // to degree 0.
  const double n2 = 6.0 * rec.dsc * rec.dsc - 405.0 * rec.num * rec.num;
  r.inequality_margins = {rec.dsc, n2};
  r.genericity_flags = {{"discriminant > 0", rec.dsc > tol}};

  if (rec.available) {
    // The three unprinted relations: compare J8..J10 against the parametric
    // polynomials evaluated at the recovered sigmas.
    // The recovered sigmas are on the normalized scale, so the parametric
    // values compare directly against j8..j10.
    const InvariantVector p = orthotropic_parametric(rec.s1, rec.s2, rec.s3);
    for (int k = 8; k <= 10; ++k) {
      const double want = p.J(k);
      const double have = (k == 8 ? x.j8 : k == 9 ? x.j9 : x.j10);
      r.syzygy_residuals.push_back(std::abs(have - want) /
                                   std::max(1.0, std::abs(have) + std::abs(want)));
    }
    const auto roots = cubic_roots_desc(rec.s1, rec.s2, rec.s3);
    const double sq = std::sqrt(J.J(2));
    r.slice_params = {roots[0] * sq, roots[1] * sq, roots[2] * sq};
  } else {
    r.recovery_available = false;
    r.note = "closed-stratum boundary (discriminant ~ 0); use higher-symmetry tests";
  }

  r.closed_member = all_below(r.syzygy_residuals, tol);
  r.member = r.closed_member && rec.available && rec.dsc > tol && n2 >= -tol;
  return r;
}

std::vector<std::pair<std::string, double>> bifurcation_path(const InvariantVector& J,
                                                             double tol, double scale,
                                                             double tau_zero) {
  std::vector<std::pair<std::string, double>> out;
  const double s = scale > 0.0 ? scale : 1.0;
  if (J.J(2) <= (tau_zero * s) * (tau_zero * s)) return out;

  const J10 x = unpack(safe_normalize(J));
  const std::vector<double> fc = family_cubic(x);
  const std::vector<double> ft = family_transverse(x);
  const std::vector<double> fg = family_trigonal(x);
  const std::vector<double> f4 = family_tetragonal(x);
  const std::vector<double> fo = family_orthotropic(x);

  bool any = false;
  if (all_below(fc, tol)) {
    out.emplace_back("O->SO(3)", 1.0);
    any = true;
  }
  if (all_below(ft, tol)) {
    out.emplace_back("O(2)->SO(3)", 1.0);
    any = true;
  }

  const double den = 1.0 - 3.0 * x.j4;
  const bool dihedral_recovery = std::abs(den) > 1e-12;
  if (all_below(fg, tol) && dihedral_recovery) {
    const double dhat = -x.j5 / (4.0 * den);
    const double s2hat = (1.0 - 280.0 * dhat * dhat) / 16.0;
    if (s2hat >= -tol) {
      const double shat = std::sqrt(std::max(0.0, s2hat));
      out.emplace_back("D3->O(2)", shat);
      out.emplace_back("D3->O", std::abs(s2hat - 50.0 * dhat * dhat));
      any = true;
    }
  }
  if (all_below(f4, tol) && dihedral_recovery) {
    const double dhat = -x.j5 / (4.0 * den);
    const double s2hat = (1.0 - 280.0 * dhat * dhat) / 8.0;
    if (s2hat >= -tol) {
      const double shat = std::sqrt(std::max(0.0, s2hat));
      out.emplace_back("D4->O(2)", shat);
      out.emplace_back("D4->O", std::abs(s2hat - 25.0 * dhat * dhat));
      any = true;
    }
  }
  const OrthoRecovery rec = ortho_recover(x);
  if (all_below(fo, tol)) {
    // The root-collision residual is the normalized discriminant itself and
    // stays defined on the collision locus, where root recovery breaks down.
    out.emplace_back("D2->D4/O(2)", std::abs(rec.dsc) / 432.0);
    if (rec.available) {
      const HermiteResult h = hermite_distinct_roots(rec.s1, rec.s2, rec.s3, 0.0);
      out.emplace_back("D2->O", std::abs(h.delta2));
    }
    any = true;
  }

  if (!any) {
    out.emplace_back("->cubic", max_of(fc));
    out.emplace_back("->transverse", max_of(ft));
    out.emplace_back("->trigonal", max_of(fg));
    out.emplace_back("->tetragonal", max_of(f4));
    out.emplace_back("->orthotropic", max_of(fo));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

Harmonic4 reconstruct_normal_form(const StratumResult& r) {
  if (!r.member) {
    throw std::invalid_argument(std::string("no normal form available: not a member of the ") +
                                to_string(r.cls) + " stratum");
  }
  switch (r.cls) {
    case SymClass::ISOTROPIC:
      return Harmonic4{};
    case SymClass::CUBIC:
      return normal_form_cubic(r.slice_params.at(0));
    case SymClass::TRANSVERSE:
      return normal_form_transverse(r.slice_params.at(0));
    case SymClass::TRIGONAL:
      return normal_form_trigonal(r.slice_params.at(0), r.slice_params.at(1));
    case SymClass::TETRAGONAL:
      return normal_form_tetragonal(r.slice_params.at(0), r.slice_params.at(1));
    case SymClass::ORTHOTROPIC:
      return normal_form_orthotropic(r.slice_params.at(0), r.slice_params.at(1),
                                     r.slice_params.at(2));
    default:
      throw std::invalid_argument(std::string("class ") + to_string(r.cls) +
                                  " has no finite-monodromy normal form");
  }
}

Harmonic4 normal_form_cubic(double delta) {
  return Harmonic4::from_h({0, 0, 0, 0, 0, 0, -4 * delta, -4 * delta, -4 * delta});
}

Harmonic4 normal_form_transverse(double delta) {
  return Harmonic4::from_h({0, 0, 0, 0, 0, 0, -4 * delta, -4 * delta, delta});
}

Harmonic4 normal_form_trigonal(double delta, double sigma) {
  return Harmonic4::from_h({0, 0, 0, 0, sigma, 0, -4 * delta, -4 * delta, delta});
}

Harmonic4 normal_form_tetragonal(double delta, double sigma) {
  return Harmonic4::from_h({0, 0, 0, 0, 0, 0, -4 * delta, -4 * delta, delta + sigma});
}

Harmonic4 normal_form_orthotropic(double l1, double l2, double l3) {
  return Harmonic4::from_h({0, 0, 0, 0, 0, 0, l1, l2, l3});
}

InvariantVector cubic_parametric(double d) {
  InvariantVector J;
  const double d2 = d * d;
  J.J(2) = 480 * d2;
  J.J(3) = 1920 * d2 * d;
  J.J(4) = 76800 * d2 * d2;
  J.J(5) = 0;
  J.J(6) = 12288000 * d2 * d2 * d2;
  J.J(7) = J.J(8) = J.J(9) = J.J(10) = 0;
  return J;
}

InvariantVector transverse_parametric(double d) {
  InvariantVector J;
  double p = d * d;
  J.J(2) = 280 * p;
  p *= d;
  J.J(3) = 720 * p;
  p *= d;
  J.J(4) = 32800 * p;
  p *= d;
  J.J(5) = 80000 * p;
  p *= d;
  J.J(6) = 4528000 * p;
  p *= d;
  J.J(7) = 17600000 * p;
  p *= d;
  J.J(8) = 211200000 * p;
  p *= d;
  J.J(9) = 3872000000 * p;
  p *= d;
  J.J(10) = 46464000000 * p;
  return J;
}

InvariantVector trigonal_parametric(double d, double s2) {
  InvariantVector J;
  const double d2 = d * d, d4 = d2 * d2, d6 = d4 * d2;
  const double a = 50 * d2 - s2;   // appears squared throughout
  const double b = 22 * d2 + s2;
  J.J(2) = 280 * d2 + 16 * s2;
  J.J(3) = 144 * d * (5 * d2 - s2);
  J.J(4) = 32800 * d4 + 2720 * s2 * d2 + 88 * s2 * s2;
  J.J(5) = 32 * d * a * a;
  J.J(6) = 4528000 * d6 + 436800 * s2 * d4 + 20640 * s2 * s2 * d2 + 496 * s2 * s2 * s2;
  J.J(7) = 320 * d * b * a * a;
  J.J(8) = 3840 * d2 * b * a * a;
  J.J(9) = 3200 * d * a * a * b * b;
  J.J(10) = 38400 * d2 * a * a * b * b;
  return J;
}

InvariantVector tetragonal_parametric(double d, double s2) {
  InvariantVector J;
  const double d2 = d * d, d4 = d2 * d2, d6 = d4 * d2;
  const double a = 25 * d2 - s2;
  const double b = 55 * d2 + s2;
  J.J(2) = 8 * s2 + 280 * d2;
  J.J(3) = 48 * d * (s2 + 15 * d2);
  J.J(4) = 32 * s2 * s2 + 960 * d2 * s2 + 32800 * d4;
  J.J(5) = 128 * d * a * a;
  J.J(6) = 128 * s2 * s2 * s2 + 5760 * s2 * s2 * d2 + 86400 * s2 * d4 + 4528000 * d6;
  J.J(7) = 512 * d * b * a * a;
  J.J(8) = 6144 * d2 * b * a * a;
  J.J(9) = 2048 * d * a * a * b * b;
  J.J(10) = 24576 * d2 * a * a * b * b;
  return J;
}

InvariantVector orthotropic_parametric(double s1, double s2, double s3) {
  InvariantVector J;
  const double s1p2 = s1 * s1, s1p3 = s1p2 * s1, s1p4 = s1p3 * s1, s1p5 = s1p4 * s1,
               s1p6 = s1p5 * s1, s1p7 = s1p6 * s1;
  const double s2p2 = s2 * s2, s2p3 = s2p2 * s2, s2p4 = s2p3 * s2, s2p5 = s2p4 * s2;
  const double s3p2 = s3 * s3, s3p3 = s3p2 * s3;
  J.J(2) = -14 * s2 + 8 * s1p2;
  J.J(3) = -6 * s1 * s2 + 24 * s3;
  J.J(4) = 40 * s1 * s3 - 112 * s1p2 * s2 + 68 * s2p2 + 32 * s1p4;
  J.J(5) = 64 * s1p2 * s3 - 12 * s2 * s3 - 16 * s1p3 * s2 + 28 * s1 * s2p2;
  J.J(6) = -344 * s2p3 + 192 * s1p3 * s3 - 24 * s3p2 - 672 * s1p4 * s2 + 1008 * s1p2 * s2p2 +
           128 * s1p6 - 504 * s1 * s2 * s3;
  J.J(7) = -432 * s1p2 * s2 * s3 + 384 * s1p4 * s3 + 104 * s2p2 * s3 - 96 * s1 * s3p2 -
           64 * s1p5 * s2 + 192 * s1p3 * s2p2 - 248 * s1 * s2p3;
  J.J(8) = 608 * s1p3 * s2 * s3 + 80 * s2p4 - 768 * s1p5 * s3 + 192 * s1p2 * s3p2 +
           72 * s2 * s3p2 + 288 * s1p4 * s2p2 - 416 * s1p2 * s2p3 + 744 * s1 * s2p2 * s3;
  J.J(9) = -5248 * s1p4 * s2 * s3 + 2880 * s1p2 * s2p2 * s3 + 1328 * s1 * s2 * s3p2 +
           144 * s3p3 + 2304 * s1p6 * s3 - 1152 * s1p3 * s3p2 - 880 * s2p3 * s3 -
           256 * s1p7 * s2 + 1024 * s1p5 * s2p2 - 2304 * s1p3 * s2p3 + 2160 * s1 * s2p4;
  J.J(10) = 10752 * s1p5 * s2 * s3 - 1280 * s1p3 * s2p2 * s3 - 5664 * s1 * s2p3 * s3 -
            2688 * s1p2 * s2 * s3p2 - 800 * s2p5 - 4608 * s1p7 * s3 + 2304 * s1p4 * s3p2 -
            1344 * s2p2 * s3p2 - 288 * s1 * s3p3 + 1536 * s1p6 * s2p2 - 4224 * s1p4 * s2p3 +
            3104 * s1p2 * s2p4;
  return J;
}

}  // namespace elsym
