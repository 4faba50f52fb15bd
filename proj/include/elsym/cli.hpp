#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "elsym/classifier.hpp"

namespace elsym::cli {

struct InputRecord {
  std::string id;
  std::string format = "voigt";  // "voigt" | "kelvin"
  Mat6 matrix = Mat6::Zero();
  std::string units;  // informational only
};

// Parses a JSON array of records. Unknown keys are ignored; a missing
// "format" falls back to default_format. Throws std::runtime_error on
// malformed input; asymmetric matrices are rejected naming the offending
// 1-based entry pair.
std::vector<InputRecord> parse_records(const std::string& text,
                                       const std::string& default_format = "voigt");

ElasticityTensor tensor_of(const InputRecord& rec);

nlohmann::ordered_json report_json(const InputRecord& rec, const Certificate& cert);
std::string report_text(const InputRecord& rec, const Certificate& cert);

// Entry point shared by the binary and the tests. args excludes argv[0] and
// is in natural order. Returns the process exit code: 0 ok, 2 input error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace elsym::cli
