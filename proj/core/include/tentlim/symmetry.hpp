#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tentlim/chains.hpp"
#include "tentlim/folding.hpp"

namespace tentlim {

// Link id given to the anchor entry, which sits in no link of the chain.
inline constexpr LinkId kAnchorLink = -2;

// Closed window [start, end] of entry indices over a pattern with link data. Both referents must outlive it.
struct ArcWindow {
  const FoldingPattern* source = nullptr;
  const LinkAssignment* links = nullptr;
  std::size_t start = 0;
  std::size_t end = 0;

  ArcWindow() = default;
  ArcWindow(const FoldingPattern& fp, const LinkAssignment& la, std::size_t start, std::size_t end);

  std::size_t size() const { return end - start + 1; }
  Level level(std::size_t i) const { return source->entries[i]; }
  LinkId link(std::size_t i) const;
  ArcWindow sub(std::size_t a, std::size_t b) const { return ArcWindow(*source, *links, a, b); }
};

enum class SymmetryClass {
  P_SYMMETRIC,
  QUASI_P_SYMMETRIC,
  BASIC_QUASI,
  LINK_SYMMETRIC_ONLY,
  DECREASING_QUASI,
  INCREASING_QUASI,
  MAXIMAL_DECREASING,
  MAXIMAL_INCREASING,
  CONCAT_INC_DEC,
  NONE,
  INCONCLUSIVE,
};

std::string to_string(SymmetryClass c);

struct PSymmetry {
  bool symmetric = false;
  std::optional<std::size_t> midpoint;
};

PSymmetry is_p_symmetric(const ArcWindow& w);

// Tip runs are the maximal end runs of the boundary link inside the window; the core lies between them.
struct QuasiStructure {
  std::size_t left_tip_end = 0;     // last index of the left tip run
  std::size_t right_tip_start = 0;  // first index of the right tip run
  std::size_t midpoint = 0;         // centre of the symmetric core
};

// Clause (iv) extends both tips to their full runs in the source and asks whether the result is
// symmetric about the same midpoint. Pattern ends count as arc ends.
std::optional<QuasiStructure> quasi_structure(const ArcWindow& w);
bool is_quasi_p_symmetric(const ArcWindow& w);

// Precondition: w is quasi-p-symmetric (InvalidInput otherwise).
bool is_basic_quasi(const ArcWindow& w);

// Links visited in order, same-link runs collapsed; ordered chains also pass through the links in between.
bool is_link_symmetric(const ArcWindow& w);

enum class Direction { decreasing, increasing };

struct QuasiChain {
  Direction direction = Direction::decreasing;
  std::vector<std::size_t> nodes;  // x^0 .. x^n
  bool basic = false;              // every [x^{i-1}, x^{i+1}] is basic
};

// Nodes are run maxima: x^0 tops the start run, x^n the end run, and [x^{i-1}, x^{i+1}] is quasi with midpoint x^i.
std::optional<QuasiChain> decompose_quasi_chain(const ArcWindow& w);

enum class EndStatus { stopped, horizon };

struct MaximalChain {
  QuasiChain chain;
  std::size_t lo = 0;  // x^{-1} when extended at the start, else x^0
  std::size_t hi = 0;  // x^{n+1} when extended at the end, else x^n
  bool extended = false;
  EndStatus left = EndStatus::stopped;
  EndStatus right = EndStatus::stopped;
  bool maximal() const { return left == EndStatus::stopped && right == EndStatus::stopped; }
};

// Accepts a quasi-p-symmetric window or a decreasing/increasing chain; grows the chain at both ends
// for as long as the source pattern allows.
MaximalChain maximal_extension(const ArcWindow& w);

struct Classification {
  SymmetryClass cls = SymmetryClass::NONE;
  std::size_t witness_lo = 0;  // containing window
  std::size_t witness_hi = 0;
  std::vector<std::size_t> nodes;
};

// One of P_SYMMETRIC, MAXIMAL_DECREASING, MAXIMAL_INCREASING, CONCAT_INC_DEC, INCONCLUSIVE or NONE.
// Precondition: w is link-symmetric.
Classification classify_link_symmetric(const ArcWindow& w);

// Most specific class of an arbitrary window, for reporting.
SymmetryClass describe(const ArcWindow& w);

enum class SearchStatus { found, blocked, horizon };

struct ExtensionPoint {
  SearchStatus status = SearchStatus::blocked;
  std::size_t position = 0;
};

// For basic quasi w with tip midpoints x (higher level) and y: m' with [m, m'] (quasi-)p-symmetric about x,
// and a with [m, a] quasi-p-symmetric about y.
ExtensionPoint extend_high(const ArcWindow& w);
ExtensionPoint extend_low(const ArcWindow& w);

}  // namespace tentlim
