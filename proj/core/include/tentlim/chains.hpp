#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tentlim/folding.hpp"
#include "tentlim/numeric.hpp"

namespace tentlim {

using LinkId = std::int64_t;

// Links are pi_p-preimages: odd 2m+1 over (g_m, g_{m+1}), even 2m over the delta-ball at g_m.
struct ChainSpec {
  std::vector<double> g;
  double delta = 0.0;
  int p = 0;
  double epsilon = 0.0;
  double s = 2.0;

  std::size_t boundary_count() const { return g.size(); }
  // all links whose projection contains x
  std::vector<LinkId> links_at(double x) const;
};

struct ChainInsertion {
  std::int64_t n = 0;
  int side = 0;  // -1 boundary placed at c_n - eta, +1 at c_n + eta
  double eta = 0.0;
};

struct BuiltChain {
  ChainSpec spec;
  std::size_t seed_points = 0;
  std::vector<ChainInsertion> insertions;
  std::vector<std::int64_t> skipped;  // levels whose D_n already sat inside one complementary interval
};

// Equidistant seed of ceil(2 s^p / eps) + 1 points, then boundaries c_n -/+ eta_n for n = 0..depth in turn.
// Level n's neighbours in a folding pattern are lambda(n) = beta(n+1) - 1 and the k with lambda(k) = n.
BuiltChain build_chain(const TentParams& params, const CuttingTimes& s, int p, double epsilon, int depth);

struct LinkAssignment {
  std::vector<LinkId> link;  // link[n] for levels 0..depth
  // Link ids from a chain are positions along [0, s/2]; ids from groups are bare labels.
  bool ordered = true;

  int depth() const { return static_cast<int>(link.size()) - 1; }
  // levels sharing a group share a link; every other level up to depth gets its own link
  static LinkAssignment from_groups(const std::vector<std::vector<Level>>& groups, int depth);
};

// Throws RangeError when some c_n does not sit in exactly one link.
LinkAssignment assign_links(const ChainSpec& spec, const TentParams& params, int depth);

LinkId link_of_level(const LinkAssignment& assign, Level n);

struct ChainReport {
  struct Check {
    std::string name;
    bool pass = true;
    std::vector<std::string> violations;
  };
  std::vector<Check> checks;  // diameter, unique link, neighbours in link, boundary escape, spec shape
  bool pass() const;
};

ChainReport verify_chain(const ChainSpec& spec, const TentParams& params, const CuttingTimes& s, int depth);

struct Turn {
  std::size_t position = 0;
  LinkId link = 0;
  Level level = 0;
};

// Interior entries above both neighbours: the arc turns in that level's link there.
std::vector<Turn> detect_turns(const FoldingPattern& fp, const LinkAssignment& assign);

}  // namespace tentlim
