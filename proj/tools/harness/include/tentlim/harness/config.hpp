#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tentlim/kneading.hpp"
#include "tentlim/numeric.hpp"

namespace tentlim::harness {

// Bad configuration or arguments; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, text, csv };

Format parse_format(const std::string& name);

struct RunConfig {
  KneadingMap kneading = KneadingMap::fibonacci(60);
  std::string kneading_source = "fibonacci";
  int salient = 12;        // salient pairs for FP(R), salient points for FP(C0)
  int fold_depth = 20;     // sigma steps for the patterns scanned by the property checks
  int oracle_depth = 60;   // deepest level compared against the backward-orbit oracle
  int chain_depth = 150;
  int p = 8;
  double epsilon = 0.05;
  double tolerance = 1e-7;
  int jobs = 1;
  Format format = Format::json;
  std::optional<std::string> out;

  // throws ConfigError
  void validate() const;
};

// {"kind": "fibonacci"}, {"kind": "offset", "d": 3}, {"kind": "explicit", "values": [0, 0, 1, ...]};
// "k_max" is optional for the closed forms.
KneadingMap kneading_from_json(const nlohmann::json& j);
nlohmann::json kneading_to_json(const KneadingMap& q);

// A path to a JSON file, inline JSON, or one of the shorthands "fibonacci" and "offset:D".
KneadingMap load_kneading(const std::string& source);

// Whitespace-separated levels, "INF" (or "inf") for the anchor.
std::vector<Level> parse_levels(const std::string& text);

}  // namespace tentlim::harness
