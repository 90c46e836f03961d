// tentlim: generation, verification and comparison of folding patterns from the command line.
// Exit status: 0 all checks pass, 1 some check failed, 2 bad input.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tentlim/chains.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/harness/acceptance.hpp"
#include "tentlim/harness/compare.hpp"
#include "tentlim/harness/config.hpp"
#include "tentlim/harness/golden.hpp"
#include "tentlim/symmetry.hpp"

using namespace tentlim;
using namespace tentlim::harness;
using nlohmann::json;

namespace {

constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct Common {
  std::string kneading = "fibonacci";
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--kneading", c.kneading, "kneading map: JSON file, inline JSON, 'fibonacci' or 'offset:D'");
  app->add_option("--format", c.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app->add_option("--out", c.out, "output path (default stdout)");
}

void emit(const Common& c, const std::string& body) {
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw ConfigError("cannot write '" + c.out + "'");
  }
  std::ostream& os = c.out.empty() ? std::cout : file;
  os << body;
  if (!body.empty() && body.back() != '\n') os << '\n';
}

std::string level_text(Level l) { return l == kInf ? "INF" : std::to_string(l); }

json levels_json(const std::vector<Level>& v) {
  json a = json::array();
  for (Level l : v) {
    if (l == kInf)
      a.push_back("INF");
    else
      a.push_back(l);
  }
  return a;
}

TentParams slope_for(const KneadingMap& q, int orbit_depth) {
  const auto nu = kneading_sequence(q, std::max(orbit_depth + 400, 600));
  return solve_slope(nu, 60);
}

// ---- kneading ----

struct KneadingArgs {
  Common c;
  int k_max = 12;
  int symbols = 64;
};

int run_kneading(const KneadingArgs& a) {
  const auto q = load_kneading(a.c.kneading);
  const auto s = cutting_times(q, a.k_max);
  const auto nu = kneading_sequence(q, a.symbols);
  const auto adm = is_admissible(q, a.k_max);
  const bool fib = is_fibonacci_like(q, a.k_max);
  std::optional<int> kappa;
  try {
    kappa = kappa_data(nu).kappa;
  } catch (const RangeError&) {
  }
  std::vector<int> qv;
  std::vector<std::string> sv;
  for (int k = 1; k <= a.k_max; ++k) qv.push_back(q(k));
  for (int k = 0; k <= a.k_max; ++k) sv.push_back(s[k].str());
  if (a.c.format == "json") {
    json j{{"kneading", kneading_to_json(q)}, {"Q", qv},          {"cutting_times", sv},
           {"nu", nu.to_string()},           {"admissible", adm.admissible}, {"fibonacci_like", fib}};
    j["kappa"] = kappa ? json(*kappa) : json(nullptr);
    if (adm.first_violation) j["first_violation"] = *adm.first_violation;
    emit(a.c, j.dump(2));
  } else if (a.c.format == "csv") {
    std::ostringstream os;
    os << "k,Q,S\n";
    for (int k = 0; k <= a.k_max; ++k) os << k << "," << (k ? q(k) : 0) << "," << sv[k] << "\n";
    emit(a.c, os.str());
  } else {
    std::ostringstream os;
    os << "Q(1.." << a.k_max << "):";
    for (int v : qv) os << " " << v;
    os << "\nS(0.." << a.k_max << "):";
    for (const auto& v : sv) os << " " << v;
    os << "\nnu: " << nu.to_string() << "\nadmissible: " << (adm.admissible ? "yes" : "no")
       << "\nFibonacci-like: " << (fib ? "yes" : "no") << "\nkappa: " << (kappa ? std::to_string(*kappa) : "?")
       << "\n";
    emit(a.c, os.str());
  }
  return adm.admissible ? 0 : kFail;
}

// ---- fold ----

struct FoldArgs {
  Common c;
  std::string side = "c0";
  int salient = 6;
  int depth = -1;
};

int run_fold(const FoldArgs& a) {
  const auto q = load_kneading(a.c.kneading);
  FoldingPattern fp;
  if (a.depth >= 0) {
    const auto s = cutting_times_for_depth(q, a.depth);
    fp = iterate(a.side == "c0" ? seed_c0() : seed_r(), s, a.depth);
  } else {
    fp = a.side == "c0" ? fp_c0(q, a.salient) : fp_r(q, a.salient);
  }
  const auto sal = salient_indices(fp);
  if (a.c.format == "json") {
    json j{{"side", a.side}, {"depth", fp.depth}, {"size", fp.size()}, {"entries", levels_json(fp.entries)},
           {"salient", {{"right", sal.right}, {"left", sal.left}}}};
    emit(a.c, j.dump());
  } else if (a.c.format == "csv") {
    std::ostringstream os;
    os << "index,level\n";
    for (std::size_t i = 0; i < fp.size(); ++i) os << i << "," << level_text(fp.entries[i]) << "\n";
    emit(a.c, os.str());
  } else {
    emit(a.c, fp.to_string());
  }
  return 0;
}

// ---- chain ----

struct ChainArgs {
  Common c;
  int p = 8;
  double epsilon = 0.05;
  int depth = 150;
  std::string spec;
};

json spec_json(const ChainSpec& spec) {
  return {{"p", spec.p}, {"epsilon", spec.epsilon}, {"delta", spec.delta}, {"s", spec.s}, {"boundaries", spec.g}};
}

ChainSpec spec_from_json(const json& j) {
  ChainSpec spec;
  try {
    spec.p = j.at("p").get<int>();
    spec.epsilon = j.at("epsilon").get<double>();
    spec.delta = j.at("delta").get<double>();
    spec.s = j.value("s", 2.0);
    spec.g = j.at("boundaries").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed chain spec: ") + e.what());
  }
  return spec;
}

json report_json(const ChainReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"violations", c.violations}});
  return {{"pass", rep.pass()}, {"checks", checks}};
}

std::string report_text(const ChainReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    for (const auto& v : c.violations) os << "  " << v << "\n";
  }
  return os.str();
}

int run_chain_build(const ChainArgs& a) {
  if (a.p < 0 || !(a.epsilon > 0.0 && a.epsilon < 1.0) || a.depth < 1) throw ConfigError("bad chain parameters");
  const auto q = load_kneading(a.c.kneading);
  const auto params = slope_for(q, a.depth + 60);
  const auto s = cutting_times_for_depth(q, a.depth + 80);
  const auto built = build_chain(params, s, a.p, a.epsilon, a.depth);
  const auto rep = verify_chain(built.spec, params, s, a.depth);
  if (a.c.format == "json") {
    json j = spec_json(built.spec);
    j["depth"] = a.depth;
    j["insertions"] = built.insertions.size();
    j["report"] = report_json(rep);
    emit(a.c, j.dump(2));
  } else if (a.c.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "m,g\n";
    for (std::size_t m = 0; m < built.spec.g.size(); ++m) os << m << "," << built.spec.g[m] << "\n";
    emit(a.c, os.str());
  } else {
    std::ostringstream os;
    os << built.spec.g.size() << " boundaries, delta " << built.spec.delta << "\n" << report_text(rep);
    emit(a.c, os.str());
  }
  return rep.pass() ? 0 : kFail;
}

int run_chain_verify(const ChainArgs& a) {
  std::ifstream in(a.spec);
  if (!in) throw ConfigError("cannot read chain spec '" + a.spec + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("chain spec is not valid JSON: ") + e.what());
  }
  const auto spec = spec_from_json(j);
  const auto q = load_kneading(a.c.kneading);
  const auto params = slope_for(q, a.depth + 60);
  const auto s = cutting_times_for_depth(q, a.depth + 80);
  const auto rep = verify_chain(spec, params, s, a.depth);
  emit(a.c, a.c.format == "json" ? report_json(rep).dump(2) : report_text(rep));
  return rep.pass() ? 0 : kFail;
}

// ---- classify ----

struct ClassifyArgs {
  Common c;
  std::string pattern;
  std::string pattern_file;
  long long start = -1;
  long long end = -1;
  std::string groups;
  bool chain = false;
  int p = 8;
  double epsilon = 0.05;
};

std::vector<std::vector<Level>> parse_groups(const std::string& text) {
  std::vector<std::vector<Level>> out;
  std::stringstream all(text);
  std::string group;
  while (std::getline(all, group, ';')) {
    std::replace(group.begin(), group.end(), ',', ' ');
    auto g = parse_levels(group);
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

int run_classify(const ClassifyArgs& a) {
  std::string text = a.pattern;
  if (!a.pattern_file.empty()) {
    std::ifstream in(a.pattern_file);
    if (!in) throw ConfigError("cannot read pattern file '" + a.pattern_file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto entries = parse_levels(text);
  if (entries.empty()) throw ConfigError("empty pattern");
  FoldingPattern fp{Side::C0, entries, 0, false, false};
  Level top = 0;
  for (Level l : entries)
    if (l != kInf) top = std::max(top, l);

  LinkAssignment links;
  if (a.chain) {
    const auto q = load_kneading(a.c.kneading);
    const int depth = static_cast<int>(top);
    const auto params = slope_for(q, depth + 60);
    const auto s = cutting_times_for_depth(q, depth + 80);
    links = assign_links(build_chain(params, s, a.p, a.epsilon, std::max(depth, 1)).spec, params, depth);
  } else {
    const auto groups = a.groups.empty() ? golden::kLinkGroups : parse_groups(a.groups);
    int depth = static_cast<int>(top);
    for (const auto& g : groups)
      for (Level l : g) depth = std::max<int>(depth, static_cast<int>(l));
    links = LinkAssignment::from_groups(groups, depth);
  }
  const std::size_t lo = a.start < 0 ? 0 : static_cast<std::size_t>(a.start);
  const std::size_t hi = a.end < 0 ? entries.size() - 1 : static_cast<std::size_t>(a.end);
  if (lo > hi || hi >= entries.size()) throw ConfigError("window outside the pattern");
  const ArcWindow w(fp, links, lo, hi);

  json j{{"window", {lo, hi}}, {"levels", levels_json({entries.begin() + lo, entries.begin() + hi + 1})}};
  j["class"] = to_string(describe(w));
  j["p_symmetric"] = is_p_symmetric(w).symmetric;
  j["link_symmetric"] = is_link_symmetric(w);
  if (const auto qs = quasi_structure(w)) {
    j["quasi"] = {{"left_tip_end", qs->left_tip_end},
                  {"right_tip_start", qs->right_tip_start},
                  {"midpoint", qs->midpoint},
                  {"basic", is_basic_quasi(w)}};
  }
  if (const auto ch = decompose_quasi_chain(w)) {
    j["chain"] = {{"direction", ch->direction == Direction::decreasing ? "decreasing" : "increasing"},
                  {"nodes", ch->nodes},
                  {"basic", ch->basic}};
  }
  if (is_link_symmetric(w)) {
    const auto cl = classify_link_symmetric(w);
    j["link_symmetric_class"] = {{"class", to_string(cl.cls)},
                                 {"witness", {cl.witness_lo, cl.witness_hi}},
                                 {"nodes", cl.nodes}};
  }
  if (a.c.format == "json") {
    emit(a.c, j.dump(2));
  } else {
    std::ostringstream os;
    os << "window [" << lo << ", " << hi << "]: " << j["class"].get<std::string>() << "\n";
    if (j.contains("quasi"))
      os << "quasi midpoint " << j["quasi"]["midpoint"] << (j["quasi"]["basic"].get<bool>() ? ", basic" : ", not basic")
         << "\n";
    if (j.contains("chain")) os << "chain " << j["chain"]["direction"].get<std::string>() << " " << j["chain"]["nodes"] << "\n";
    if (j.contains("link_symmetric_class"))
      os << "link-symmetric: " << j["link_symmetric_class"]["class"].get<std::string>() << "\n";
    emit(a.c, os.str());
  }
  return 0;
}

// ---- compare ----

struct CompareArgs {
  Common c;
  std::string against = "offset:3";
  int salient = 8;
};

int run_compare(const CompareArgs& a) {
  const auto rep = compare_fp_r(load_kneading(a.c.kneading), load_kneading(a.against), a.salient);
  emit(a.c, a.c.format == "json" ? to_json(rep).dump(2) : rep.summary());
  return 0;
}

// ---- suite ----

struct SuiteArgs {
  Common c;
  RunConfig cfg;
  bool timing = false;
  bool acceptance_only = false;
};

int run_suite_cmd(SuiteArgs a) {
  a.cfg.kneading = load_kneading(a.c.kneading);
  a.cfg.kneading_source = a.c.kneading;
  a.cfg.validate();
  auto checks = acceptance_checks();
  if (!a.acceptance_only) {
    const auto props = property_checks();
    checks.insert(checks.end(), props.begin(), props.end());
  }
  const auto rep = run_suite(checks, a.cfg);
  if (a.c.format == "json") {
    json j = to_json(rep, a.timing);
    j["config"] = {{"kneading", kneading_to_json(a.cfg.kneading)},
                   {"salient", a.cfg.salient},
                   {"fold_depth", a.cfg.fold_depth},
                   {"chain_depth", a.cfg.chain_depth},
                   {"p", a.cfg.p},
                   {"epsilon", a.cfg.epsilon},
                   {"tolerance", a.cfg.tolerance}};
    emit(a.c, j.dump(2));
  } else if (a.c.format == "csv") {
    std::ostringstream os;
    os << "id,pass,seconds\n";
    for (const auto& r : rep.results) os << r.id << "," << (r.pass ? 1 : 0) << "," << r.seconds << "\n";
    emit(a.c, os.str());
  } else {
    emit(a.c, to_text(rep));
  }
  return rep.pass() ? 0 : kFail;
}

// ---- plotdata ----

struct PlotArgs {
  Common c;
  int depth = 200;
  int p = 8;
  double epsilon = 0.05;
  int chain_depth = 150;
};

int run_plotdata(const PlotArgs& a) {
  if (a.depth < 1 || a.chain_depth < 1) throw ConfigError("depths must be positive");
  const auto q = load_kneading(a.c.kneading);
  const auto params = slope_for(q, std::max(a.depth, a.chain_depth + 60));
  const auto s = cutting_times_for_depth(q, a.chain_depth + 80);
  const auto built = build_chain(params, s, a.p, a.epsilon, a.chain_depth);
  std::ostringstream os;
  os.precision(17);
  os << "series,index,value\n";
  for (int n = 0; n <= a.depth && n <= params.depth(); ++n) os << "orbit," << n << "," << params.orbit[n] << "\n";
  for (std::size_t m = 0; m < built.spec.g.size(); ++m) os << "boundary," << m << "," << built.spec.g[m] << "\n";
  emit(a.c, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folding patterns of tent-map inverse limits"};
  app.require_subcommand(1);

  KneadingArgs kn;
  auto* kcmd = app.add_subcommand("kneading", "kneading map, cutting times, kneading sequence");
  add_common(kcmd, kn.c);
  kcmd->add_option("--depth", kn.k_max, "largest k")->check(CLI::PositiveNumber);
  kcmd->add_option("--symbols", kn.symbols, "kneading sequence length")->check(CLI::PositiveNumber);

  FoldArgs fo;
  auto* fcmd = app.add_subcommand("fold", "generate FP(C0) or FP(R)");
  add_common(fcmd, fo.c);
  fcmd->add_option("--side", fo.side, "c0 or r")->check(CLI::IsMember({"c0", "r"}));
  fcmd->add_option("--salient", fo.salient, "salient points (C0) or salient pairs (R)")->check(CLI::PositiveNumber);
  fcmd->add_option("--depth", fo.depth, "sigma steps instead of a salient count")->check(CLI::NonNegativeNumber);

  ChainArgs ch;
  auto* ccmd = app.add_subcommand("chain", "build or verify a chain");
  ccmd->require_subcommand(1);
  auto* cbuild = ccmd->add_subcommand("build", "build a chain at the solved slope and verify it");
  auto* cverify = ccmd->add_subcommand("verify", "verify a chain spec file");
  for (auto* sub : {cbuild, cverify}) {
    add_common(sub, ch.c);
    sub->add_option("--depth", ch.depth, "levels to verify")->check(CLI::PositiveNumber);
  }
  cbuild->add_option("--p", ch.p, "projection depth p")->check(CLI::NonNegativeNumber);
  cbuild->add_option("--epsilon", ch.epsilon, "link diameter bound");
  cverify->add_option("--spec", ch.spec, "chain spec JSON")->required();

  ClassifyArgs cl;
  auto* lcmd = app.add_subcommand("classify", "symmetry class of a window of a pattern");
  add_common(lcmd, cl.c);
  lcmd->add_option("--pattern", cl.pattern, "levels separated by spaces, INF for the anchor");
  lcmd->add_option("--pattern-file", cl.pattern_file, "file holding the levels");
  lcmd->add_option("--start", cl.start, "first index of the window");
  lcmd->add_option("--end", cl.end, "last index of the window");
  lcmd->add_option("--groups", cl.groups, "levels sharing links, e.g. '1,14,22;9,43'");
  lcmd->add_flag("--chain", cl.chain, "take links from a built chain instead of groups");
  lcmd->add_option("--p", cl.p, "projection depth p for --chain")->check(CLI::NonNegativeNumber);
  lcmd->add_option("--epsilon", cl.epsilon, "link diameter bound for --chain");

  CompareArgs co;
  auto* mcmd = app.add_subcommand("compare", "first divergence of FP(R) for two kneading maps");
  add_common(mcmd, co.c);
  mcmd->add_option("--against", co.against, "second kneading map");
  mcmd->add_option("--salient", co.salient, "salient pairs to generate")->check(CLI::PositiveNumber);

  SuiteArgs su;
  auto* scmd = app.add_subcommand("suite", "acceptance battery and property checks");
  add_common(scmd, su.c);
  scmd->add_option("--salient", su.cfg.salient, "salient count for the property checks");
  scmd->add_option("--depth", su.cfg.fold_depth, "sigma steps for the scanned patterns");
  scmd->add_option("--chain-depth", su.cfg.chain_depth, "levels for chain verification");
  scmd->add_option("--oracle-depth", su.cfg.oracle_depth, "deepest oracle comparison");
  scmd->add_option("--p", su.cfg.p, "projection depth p");
  scmd->add_option("--epsilon", su.cfg.epsilon, "link diameter bound");
  scmd->add_option("--tolerance", su.cfg.tolerance, "projection tolerance");
  scmd->add_option("--jobs", su.cfg.jobs, "checks run in parallel");
  scmd->add_flag("--timing", su.timing, "include timings in the JSON report");
  scmd->add_flag("--acceptance-only", su.acceptance_only, "skip the property checks");

  PlotArgs pl;
  auto* pcmd = app.add_subcommand("plotdata", "CSV of the critical orbit and chain boundaries");
  add_common(pcmd, pl.c);
  pcmd->add_option("--depth", pl.depth, "orbit length")->check(CLI::PositiveNumber);
  pcmd->add_option("--p", pl.p, "projection depth p")->check(CLI::NonNegativeNumber);
  pcmd->add_option("--epsilon", pl.epsilon, "link diameter bound");
  pcmd->add_option("--chain-depth", pl.chain_depth, "chain depth")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*kcmd) return run_kneading(kn);
    if (*fcmd) return run_fold(fo);
    if (*cbuild) return run_chain_build(ch);
    if (*cverify) return run_chain_verify(ch);
    if (*lcmd) return run_classify(cl);
    if (*mcmd) return run_compare(co);
    if (*scmd) return run_suite_cmd(su);
    if (*pcmd) return run_plotdata(pl);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const RangeError& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
