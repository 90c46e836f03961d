#include "tentlim/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace tentlim::harness {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  throw ConfigError("unknown format '" + name + "' (json, text or csv)");
}

void RunConfig::validate() const {
  if (salient < 1) throw ConfigError("salient count must be positive");
  if (fold_depth < 1) throw ConfigError("fold depth must be positive");
  if (oracle_depth < 1) throw ConfigError("oracle depth must be positive");
  if (chain_depth < 1) throw ConfigError("chain depth must be positive");
  if (p < 0) throw ConfigError("p must be non-negative");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (jobs < 1) throw ConfigError("jobs must be positive");
}

KneadingMap kneading_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ConfigError("kneading map must be a JSON object");
    const std::string kind = j.value("kind", std::string("explicit"));
    const int k_max = j.value("k_max", 60);
    if (kind == "fibonacci") return KneadingMap::fibonacci(k_max);
    if (kind == "offset") {
      if (!j.contains("d")) throw ConfigError("offset kneading map needs \"d\"");
      return KneadingMap::offset(j.at("d").get<int>(), k_max);
    }
    if (kind == "explicit") {
      if (!j.contains("values")) throw ConfigError("explicit kneading map needs \"values\"");
      return KneadingMap::explicit_values(j.at("values").get<std::vector<int>>());
    }
    throw ConfigError("unknown kneading map kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed kneading map: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("invalid kneading map: ") + e.what());
  }
}

nlohmann::json kneading_to_json(const KneadingMap& q) {
  switch (q.kind()) {
    case KneadingMap::Kind::fibonacci: return {{"kind", "fibonacci"}, {"k_max", q.k_max()}};
    case KneadingMap::Kind::offset: return {{"kind", "offset"}, {"d", q.offset_d()}, {"k_max", q.k_max()}};
    case KneadingMap::Kind::explicit_list: return {{"kind", "explicit"}, {"values", q.values()}};
  }
  return {};
}

KneadingMap load_kneading(const std::string& source) {
  if (source == "fibonacci") return KneadingMap::fibonacci(60);
  if (source.rfind("offset:", 0) == 0) {
    try {
      return KneadingMap::offset(std::stoi(source.substr(7)), 60);
    } catch (const std::exception& e) {
      throw ConfigError("bad offset shorthand '" + source + "'");
    }
  }
  nlohmann::json j;
  try {
    if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
      j = nlohmann::json::parse(source);
    } else {
      std::ifstream in(source);
      if (!in) throw ConfigError("cannot read kneading map file '" + source + "'");
      j = nlohmann::json::parse(in);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("kneading map is not valid JSON: " + std::string(e.what()));
  }
  // a bare array is the explicit list Q(1), Q(2), ...
  if (j.is_array()) return kneading_from_json({{"kind", "explicit"}, {"values", j}});
  return kneading_from_json(j);
}

std::vector<Level> parse_levels(const std::string& text) {
  std::istringstream in(text);
  std::vector<Level> out;
  std::string tok;
  while (in >> tok) {
    if (tok == "INF" || tok == "inf") {
      out.push_back(kInf);
      continue;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw ConfigError("bad level '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace tentlim::harness
