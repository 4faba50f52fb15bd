#include "elsym/grouptab.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace elsym {

int Multiplicities::dim() const {
  int d = 0;
  for (std::size_t k = 0; k < alpha.size(); ++k) d += alpha[k] * (2 * static_cast<int>(k) + 1);
  return d;
}

int fixed_point_dim(const SubgroupId& H, const Multiplicities& m) {
  auto accumulate = [&m](auto per_k) {
    int s = 0;
    for (std::size_t k = 0; k < m.alpha.size(); ++k) s += m.alpha[k] * per_k(static_cast<int>(k));
    return s;
  };
  switch (H.kind) {
    case GroupKind::TRIV:
      return accumulate([](int k) { return 2 * k + 1; });
    case GroupKind::ZN:
      if (H.n < 2) throw std::invalid_argument("unknown subgroup: Z_n needs n >= 2");
      return accumulate([&H](int k) { return 2 * (k / H.n) + 1; });
    case GroupKind::DN:
      if (H.n < 2) throw std::invalid_argument("unknown subgroup: D_n needs n >= 2");
      return accumulate([&H](int k) { return k / H.n + (k % 2 == 0 ? 1 : 0); });
    case GroupKind::TETRA:
      return accumulate([](int k) { return 2 * (k / 3) + k / 2 - k + 1; });
    case GroupKind::OCTA:
      return accumulate([](int k) { return k / 4 + k / 3 + k / 2 - k + 1; });
    case GroupKind::ICOSA:
      return accumulate([](int k) { return k / 5 + k / 3 + k / 2 - k + 1; });
    case GroupKind::SO2:
      return accumulate([](int) { return 1; });
    case GroupKind::O2:
      return accumulate([](int k) { return k % 2 == 0 ? 1 : 0; });
    case GroupKind::SO3:
      return m.alpha.empty() ? 0 : m.alpha[0];
  }
  throw std::invalid_argument("unknown subgroup");
}

Multiplicities ela_multiplicities() { return {{2, 0, 2, 0, 1}}; }
Multiplicities h4_multiplicities() { return {{0, 0, 0, 0, 1}}; }

namespace {

struct Row {
  SymClass cls;
  SubgroupId H;
  const char* subgroup;
  const char* normalizer;
  int dim_H;  // dimension of H as a Lie group
  int dim_N;  // dimension of N(H)
  const char* monodromy;
  int monodromy_order;  // -1 = infinite
};

constexpr std::array<Row, 8> kRows = {{
    {SymClass::TRICLINIC, {GroupKind::TRIV, 0}, "[1]", "SO(3)", 0, 3, "SO(3)", -1},
    {SymClass::MONOCLINIC, {GroupKind::ZN, 2}, "[Z2]", "O(2)", 0, 1, "O(2)", -1},
    {SymClass::ORTHOTROPIC, {GroupKind::DN, 2}, "[D2]", "O", 0, 0, "S3", 6},
    {SymClass::TRIGONAL, {GroupKind::DN, 3}, "[D3]", "D6", 0, 0, "S2", 2},
    {SymClass::TETRAGONAL, {GroupKind::DN, 4}, "[D4]", "D8", 0, 0, "S2", 2},
    {SymClass::TRANSVERSE, {GroupKind::O2, 0}, "[O(2)]", "O(2)", 1, 1, "1", 1},
    {SymClass::CUBIC, {GroupKind::OCTA, 0}, "[O]", "O", 0, 0, "1", 1},
    {SymClass::ISOTROPIC, {GroupKind::SO3, 0}, "[SO(3)]", "SO(3)", 3, 3, "1", 1},
}};

const Row& row_for(SymClass cls) {
  for (const Row& r : kRows)
    if (r.cls == cls) return r;
  throw std::invalid_argument("unknown class id");
}

StratDims dims_for(const Row& r, const Multiplicities& m) {
  StratDims d;
  d.fix = fixed_point_dim(r.H, m);
  // dim Sigma = dim V^H + dim SO(3) - dim N(H); the monodromy group
  // Gamma = N(H)/H has dimension dim N - dim H.
  d.strat = d.fix + 3 - r.dim_N;
  d.strat_mod = d.fix - (r.dim_N - r.dim_H);
  return d;
}

}  // namespace

SubgroupId class_subgroup(SymClass cls) { return row_for(cls).H; }

ClassInfo class_info(SymClass cls) {
  const Row& r = row_for(cls);
  ClassInfo info;
  info.cls = cls;
  info.subgroup = r.subgroup;
  info.normalizer = r.normalizer;
  info.monodromy = r.monodromy;
  info.monodromy_order = r.monodromy_order;
  info.ela = dims_for(r, ela_multiplicities());
  info.h4 = dims_for(r, h4_multiplicities());
  return info;
}

namespace {

std::string format_one_table(const char* title, bool use_ela) {
  const std::array<const char*, 8> header = {"class",     "subgroup", "normalizer",
                                             "monodromy", "order",    "dim V^H",
                                             "dim S/G",   "dim S"};
  std::vector<std::array<std::string, 8>> cells;
  for (const Row& r : kRows) {
    const ClassInfo info = class_info(r.cls);
    const StratDims& d = use_ela ? info.ela : info.h4;
    std::array<std::string, 8> c;
    c[0] = to_string(r.cls);
    c[1] = info.subgroup;
    c[2] = info.normalizer;
    c[3] = info.monodromy;
    c[4] = info.monodromy_order < 0 ? "inf" : std::to_string(info.monodromy_order);
    c[5] = std::to_string(d.fix);
    c[6] = std::to_string(d.strat_mod);
    c[7] = std::to_string(d.strat);
    cells.push_back(std::move(c));
  }
  std::array<std::size_t, 8> width{};
  for (int i = 0; i < 8; ++i) width[i] = std::string(header[i]).size();
  for (const auto& c : cells)
    for (int i = 0; i < 8; ++i) width[i] = std::max(width[i], c[i].size());

  std::string out = title;
  out += '\n';
  auto emit = [&](const std::array<std::string, 8>& c) {
    std::string line;
    for (int i = 0; i < 8; ++i) {
      line += c[i];
      if (i < 7) line.append(width[i] - c[i].size() + 2, ' ');
    }
    out += line;
    out += '\n';
  };
  std::array<std::string, 8> h;
  for (int i = 0; i < 8; ++i) h[i] = header[i];
  emit(h);
  for (const auto& c : cells) emit(c);
  return out;
}

}  // namespace

std::string format_tables() {
  std::string out = format_one_table("Isotropy classes for Ela", true);
  out += '\n';
  out += format_one_table("Isotropy classes for H4", false);
  return out;
}

}  // namespace elsym
