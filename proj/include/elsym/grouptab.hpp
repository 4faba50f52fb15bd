#pragma once

#include <string>
#include <vector>

#include "elsym/h4strata.hpp"

namespace elsym {

// Closed subgroups of SO(3) (conjugacy classes). ZN/DN carry the order
// parameter n.
enum class GroupKind { TRIV, ZN, DN, TETRA, OCTA, ICOSA, SO2, O2, SO3 };

struct SubgroupId {
  GroupKind kind = GroupKind::TRIV;
  int n = 0;
};

// Harmonic multiplicities: alpha[k] copies of H^k.
struct Multiplicities {
  std::vector<int> alpha;
  int dim() const;
};

// dim V^H by the bracket-function trace formulas; throws
// std::invalid_argument for unsupported ids (e.g. DN with n < 2).
int fixed_point_dim(const SubgroupId& H, const Multiplicities& m);

struct StratDims {
  int fix = 0;        // dim V^H
  int strat_mod = 0;  // dim Sigma_[H] / SO(3)
  int strat = 0;      // dim Sigma_[H]
};

struct ClassInfo {
  SymClass cls = SymClass::TRICLINIC;
  std::string subgroup;
  std::string normalizer;
  std::string monodromy;
  int monodromy_order = 1;  // -1 encodes an infinite monodromy group
  StratDims ela;
  StratDims h4;
};

SubgroupId class_subgroup(SymClass cls);
ClassInfo class_info(SymClass cls);

Multiplicities ela_multiplicities();  // 2H0 + 2H2 + H4
Multiplicities h4_multiplicities();   // H4

// Both stratification tables as byte-stable ASCII.
std::string format_tables();

}  // namespace elsym
