#include "elsym/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"

#include "elsym/grouptab.hpp"

namespace elsym::cli {

namespace {

using nlohmann::ordered_json;

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<double> mat3_list(const Mat3& m) {
  std::vector<double> v;
  v.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v.push_back(m(i, j));
  return v;
}

std::vector<double> mat6_list(const Mat6& m) {
  std::vector<double> v;
  v.reserve(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) v.push_back(m(i, j));
  return v;
}

const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {"triclinic",  "monoclinic", "orthotropic",
                                                 "trigonal",   "tetragonal", "transverse",
                                                 "cubic",      "isotropic"};
  return names;
}

SymClass class_from_name(const std::string& name) {
  for (int k = 0; k < 8; ++k) {
    const auto cls = static_cast<SymClass>(k);
    if (name == to_string(cls)) return cls;
  }
  throw std::runtime_error("unknown class '" + name + "'");
}

ordered_json vec3_json(const Vec3& v) { return ordered_json::array({v[0], v[1], v[2]}); }

}  // namespace

std::vector<InputRecord> parse_records(const std::string& text,
                                       const std::string& default_format) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_array()) throw std::runtime_error("input must be a JSON array of records");

  std::vector<InputRecord> out;
  int index = 0;
  for (const auto& item : root) {
    if (!item.is_object())
      throw std::runtime_error("record " + std::to_string(index) + " is not an object");
    InputRecord rec;
    rec.id = item.value("id", "record-" + std::to_string(index));
    rec.format = item.value("format", default_format);
    if (rec.format != "voigt" && rec.format != "kelvin")
      throw std::runtime_error("record '" + rec.id + "': unknown format '" + rec.format + "'");
    rec.units = item.value("units", "");
    if (!item.contains("matrix"))
      throw std::runtime_error("record '" + rec.id + "': missing \"matrix\"");
    const auto& m = item["matrix"];
    if (!m.is_array() || m.size() != 36)
      throw std::runtime_error("record '" + rec.id +
                               "': \"matrix\" must hold 36 row-major numbers");
    for (int k = 0; k < 36; ++k) {
      if (!m[k].is_number())
        throw std::runtime_error("record '" + rec.id + "': matrix entry " + std::to_string(k) +
                                 " is not a number");
      rec.matrix(k / 6, k % 6) = m[k].get<double>();
    }
    double amax = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) amax = std::max(amax, std::abs(rec.matrix(i, j)));
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (std::abs(rec.matrix(i, j) - rec.matrix(j, i)) > 1e-9 * std::max(amax, 1e-300))
          throw std::runtime_error("record '" + rec.id + "': matrix not symmetric at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") vs (" + std::to_string(j + 1) + "," +
                                   std::to_string(i + 1) + ")");
    out.push_back(std::move(rec));
    ++index;
  }
  return out;
}

ElasticityTensor tensor_of(const InputRecord& rec) {
  return rec.format == "kelvin" ? ElasticityTensor::from_kelvin(rec.matrix)
                                : ElasticityTensor::from_voigt(rec.matrix);
}

nlohmann::ordered_json report_json(const InputRecord& rec, const Certificate& cert) {
  ordered_json r;
  r["id"] = rec.id;
  r["class"] = to_string(cert.cls);
  r["digest"] = cert.digest;
  r["scale"] = cert.scale;
  r["d_zero"] = cert.d_zero;
  {
    ordered_json t;
    t["tau_syzygy"] = cert.tol.tau_syzygy;
    t["tau_zero"] = cert.tol.tau_zero;
    t["tau_rot"] = cert.tol.tau_rot;
    r["tolerances"] = t;
  }
  {
    ordered_json dec;
    dec["lambda"] = cert.parts.lambda;
    dec["mu"] = cert.parts.mu;
    dec["a"] = mat3_list(cert.parts.a.matrix());
    dec["b"] = mat3_list(cert.parts.b.matrix());
    dec["h"] = cert.parts.D.h();
    r["decomposition"] = dec;
  }
  {
    ordered_json t;
    t["class"] = to_string(cert.tuple.cls);
    t["omega"] = vec3_json(cert.tuple.omega);
    r["tuple"] = t;
  }
  {
    ordered_json cm;
    cm["run"] = cert.cm_run;
    if (cert.cm_run) {
      cm["axis"] = vec3_json(cert.cm_axis);
      cm["result"] = cert.cm_result;
    } else {
      cm["axis"] = nullptr;
      cm["result"] = nullptr;
    }
    r["cm"] = cm;
  }
  {
    ordered_json inv;
    inv["J"] = std::vector<double>(cert.J.v.begin(), cert.J.v.end());
    if (cert.have_jn)
      inv["j_normalized"] = std::vector<double>(cert.jn.v.begin(), cert.jn.v.end());
    else
      inv["j_normalized"] = nullptr;
    r["invariants"] = inv;
  }
  {
    ordered_json strata = ordered_json::array();
    for (const auto& s : cert.strata) {
      ordered_json e;
      e["class"] = to_string(s.cls);
      e["member"] = s.member;
      e["closed_member"] = s.closed_member;
      e["reality_failure"] = s.reality_failure;
      e["recovery_available"] = s.recovery_available;
      e["residuals"] = s.syzygy_residuals;
      e["margins"] = s.inequality_margins;
      ordered_json flags = ordered_json::array();
      for (const auto& [name, ok] : s.genericity_flags) {
        ordered_json f;
        f["condition"] = name;
        f["holds"] = ok;
        flags.push_back(std::move(f));
      }
      e["genericity"] = flags;
      e["slice_params"] = s.slice_params;
      e["note"] = s.note;
      strata.push_back(std::move(e));
    }
    r["strata"] = strata;
  }
  if (cert.h4.member) {
    ordered_json nf;
    nf["class"] = to_string(cert.h4.cls);
    nf["params"] = cert.h4.slice_params;
    r["normal_form"] = nf;
  } else {
    r["normal_form"] = nullptr;
  }
  if (cert.mono_axis.norm() > 0.0)
    r["mono_axis"] = vec3_json(cert.mono_axis);
  else
    r["mono_axis"] = nullptr;
  {
    ordered_json bif = ordered_json::array();
    for (const auto& [name, value] : cert.bifurcation) {
      ordered_json b;
      b["transition"] = name;
      b["residual"] = value;
      bif.push_back(std::move(b));
    }
    r["bifurcation"] = bif;
  }
  {
    ordered_json m;
    m["applied"] = cert.mga_applied;
    m["violation"] = cert.mga_violation;
    m["strict_requested"] = cert.strict_mga;
    m["strict_violation"] = cert.strict_violation;
    r["mga"] = m;
  }
  r["warnings"] = cert.warnings;
  return r;
}

std::string report_text(const InputRecord& rec, const Certificate& cert) {
  std::string t;
  t += "record " + rec.id + "\n";
  t += "  class: " + std::string(to_string(cert.cls)) + "\n";
  t += "  digest: " + cert.digest + "\n";
  t += "  scale: " + num(cert.scale) + "\n";
  t += "  tuple: " + std::string(to_string(cert.tuple.cls)) + "\n";
  if (cert.cm_run)
    t += std::string("  cowin-mehrabadi: ") + (cert.cm_result ? "pass" : "fail") + "\n";
  if (cert.h4.member) {
    t += "  normal form: " + std::string(to_string(cert.h4.cls));
    for (double p : cert.h4.slice_params) t += " " + num(p);
    t += "\n";
  }
  if (!cert.bifurcation.empty()) {
    t += "  bifurcation:";
    for (const auto& [name, value] : cert.bifurcation) t += " " + name + "=" + num(value);
    t += "\n";
  }
  for (const auto& w : cert.warnings) t += "  warning: " + w + "\n";
  return t;
}

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_classify(const std::vector<std::string>& files, const std::string& default_format,
                 const ToleranceProfile& tol, bool strict, bool text_mode, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  std::vector<std::pair<InputRecord, Certificate>> results;
  std::vector<std::string> sources = files.empty() ? std::vector<std::string>{"-"} : files;
  for (const auto& f : sources) {
    std::string text;
    if (f == "-") {
      text = slurp(in);
    } else {
      std::ifstream fs(f);
      if (!fs) {
        err << "error: cannot open '" << f << "'\n";
        return 2;
      }
      text = slurp(fs);
    }
    std::vector<InputRecord> recs;
    try {
      recs = parse_records(text, default_format);
    } catch (const std::exception& e) {
      err << "error: " << f << ": " << e.what() << "\n";
      return 2;
    }
    for (auto& rec : recs) {
      Certificate cert = classify(tensor_of(rec), tol, strict);
      results.emplace_back(std::move(rec), std::move(cert));
    }
  }
  if (text_mode) {
    for (const auto& [rec, cert] : results) out << report_text(rec, cert);
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& [rec, cert] : results) arr.push_back(report_json(rec, cert));
    out << arr.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"elasticity tensor symmetry classification"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string default_format = "voigt";
  ToleranceProfile tol;
  bool strict = false, text_mode = false, json_mode = false;
  auto* cc = app.add_subcommand("classify", "classify stiffness records");
  cc->add_option("files", files, "input files ('-' reads stdin)");
  cc->add_option("--format", default_format, "matrix format for records that omit one")
      ->check(CLI::IsMember({"voigt", "kelvin"}));
  cc->add_option("--tol-syzygy", tol.tau_syzygy, "relative residual tolerance");
  cc->add_option("--tol-zero", tol.tau_zero, "relative zero threshold");
  cc->add_flag("--strict-mga", strict, "cross-check quadratic vs H4 evidence");
  cc->add_flag("--json", json_mode, "JSON reports (default)");
  cc->add_flag("--text", text_mode, "plain-text reports");

  std::string cls_name, rec_id;
  double delta = NAN, sigma = NAN, l1 = NAN, l2 = NAN, l3 = NAN;
  double lambda = NAN, mu = NAN, ab_scale = NAN;
  std::uint64_t seed = 0;
  auto* gg = app.add_subcommand("generate", "emit a synthetic stiffness record");
  gg->add_option("--class", cls_name, "target symmetry class")
      ->required()
      ->check(CLI::IsMember(class_names()));
  gg->add_option("--delta", delta, "slice parameter delta");
  gg->add_option("--sigma", sigma, "slice parameter sigma");
  gg->add_option("--l1", l1, "orthotropic slice root 1");
  gg->add_option("--l2", l2, "orthotropic slice root 2");
  gg->add_option("--l3", l3, "orthotropic slice root 3");
  gg->add_option("--lambda", lambda, "isotropic Lame lambda");
  gg->add_option("--mu", mu, "isotropic Lame mu");
  gg->add_option("--ab-scale", ab_scale, "scale of the quadratic deviators");
  gg->add_option("--id", rec_id, "record id");
  gg->add_option("--seed", seed, "rotation seed");

  auto* tt = app.add_subcommand("tables", "print the stratification tables");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (cc->parsed())
      return cmd_classify(files, default_format, tol, strict, text_mode && !json_mode, in, out,
                          err);
    if (gg->parsed()) {
      const SymClass cls = class_from_name(cls_name);
      SampleParams p = default_params(cls);
      if (!std::isnan(delta)) p.delta = delta;
      if (!std::isnan(sigma)) p.sigma = sigma;
      if (!std::isnan(l1)) p.lambda3[0] = l1;
      if (!std::isnan(l2)) p.lambda3[1] = l2;
      if (!std::isnan(l3)) p.lambda3[2] = l3;
      const double ab = std::isnan(ab_scale) ? 1.0 : ab_scale;
      LowParts low = default_lowparts(cls, ab);
      if (!std::isnan(lambda)) low.lambda = lambda;
      if (!std::isnan(mu)) low.mu = mu;
      std::mt19937_64 rng(seed);
      const Rotation g = Rotation::random(rng);
      const ElasticityTensor C = generate_sample(cls, p, g, low);

      ordered_json rec;
      rec["id"] = rec_id.empty() ? cls_name + "-" + std::to_string(seed) : rec_id;
      rec["format"] = "voigt";
      rec["matrix"] = mat6_list(C.voigt());
      {
        ordered_json prov;
        prov["class"] = to_string(cls);
        prov["seed"] = seed;
        prov["lambda"] = low.lambda;
        prov["mu"] = low.mu;
        prov["ab_scale"] = ab;
        ordered_json pp;
        pp["delta"] = p.delta;
        pp["sigma"] = p.sigma;
        pp["lambda3"] = p.lambda3;
        pp["h"] = p.h;
        prov["params"] = pp;
        prov["rotation"] = mat3_list(g.matrix());
        rec["provenance"] = prov;
      }
      ordered_json arr = ordered_json::array();
      arr.push_back(std::move(rec));
      out << arr.dump(2) << "\n";
      return 0;
    }
    if (tt->parsed()) {
      out << format_tables();
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace elsym::cli
