#include "tentlim/symmetry.hpp"

#include <algorithm>

namespace tentlim {

ArcWindow::ArcWindow(const FoldingPattern& fp, const LinkAssignment& la, std::size_t s, std::size_t e)
    : source(&fp), links(&la), start(s), end(e) {
  if (s > e || e >= fp.entries.size()) throw InvalidInput("window outside the pattern");
}

LinkId ArcWindow::link(std::size_t i) const {
  const Level l = source->entries[i];
  if (l == kInf) return kAnchorLink;
  return link_of_level(*links, l);
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::P_SYMMETRIC: return "P_SYMMETRIC";
    case SymmetryClass::QUASI_P_SYMMETRIC: return "QUASI_P_SYMMETRIC";
    case SymmetryClass::BASIC_QUASI: return "BASIC_QUASI";
    case SymmetryClass::LINK_SYMMETRIC_ONLY: return "LINK_SYMMETRIC_ONLY";
    case SymmetryClass::DECREASING_QUASI: return "DECREASING_QUASI";
    case SymmetryClass::INCREASING_QUASI: return "INCREASING_QUASI";
    case SymmetryClass::MAXIMAL_DECREASING: return "MAXIMAL_DECREASING";
    case SymmetryClass::MAXIMAL_INCREASING: return "MAXIMAL_INCREASING";
    case SymmetryClass::CONCAT_INC_DEC: return "CONCAT_INC_DEC";
    case SymmetryClass::NONE: return "NONE";
    case SymmetryClass::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "NONE";
}

namespace {

bool palindrome(const ArcWindow& w, std::size_t a, std::size_t b) {
  while (a < b) {
    if (w.level(a) != w.level(b)) return false;
    ++a;
    --b;
  }
  return true;
}

std::size_t argmax(const ArcWindow& w, std::size_t a, std::size_t b) {
  std::size_t best = a;
  for (std::size_t i = a + 1; i <= b; ++i)
    if (w.level(i) > w.level(best)) best = i;
  return best;
}

std::size_t run_end(const ArcWindow& w, std::size_t i, std::size_t bound) {
  const LinkId l = w.link(i);
  while (i < bound && w.link(i + 1) == l) ++i;
  return i;
}

std::size_t run_start(const ArcWindow& w, std::size_t i, std::size_t bound) {
  const LinkId l = w.link(i);
  while (i > bound && w.link(i - 1) == l) --i;
  return i;
}

std::optional<QuasiStructure> quasi_at(const ArcWindow& w, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return std::nullopt;
  if (palindrome(w, lo, hi)) return std::nullopt;
  const LinkId l = w.link(lo);
  if (w.link(hi) != l) return std::nullopt;
  const std::size_t lt = run_end(w, lo, hi);
  const std::size_t rt = run_start(w, hi, lo);
  if (lt + 1 > rt - 1 || lt + 1 >= rt) return std::nullopt;
  const std::size_t clo = lt + 1;
  const std::size_t chi = rt - 1;
  if (!palindrome(w, clo, chi)) return std::nullopt;
  const std::size_t el = run_start(w, lo, 0);
  const std::size_t er = run_end(w, hi, w.source->size() - 1);
  if (el + er == clo + chi && palindrome(w, el, er)) return std::nullopt;
  return QuasiStructure{lt, rt, (clo + chi) / 2};
}

bool quasi(const ArcWindow& w, std::size_t a, std::size_t b) { return quasi_at(w, std::min(a, b), std::max(a, b)).has_value(); }

// Index arithmetic in the chosen direction: dir = -1 reads the pattern backwards.
struct View {
  const ArcWindow& w;
  int dir;
  std::size_t n() const { return w.source->size(); }
  std::size_t real(std::size_t v) const { return dir > 0 ? v : n() - 1 - v; }
  std::size_t virt(std::size_t r) const { return dir > 0 ? r : n() - 1 - r; }
  Level level(std::size_t v) const { return w.level(real(v)); }
  LinkId link(std::size_t v) const { return w.link(real(v)); }
};

struct StepOut {
  SearchStatus status = SearchStatus::blocked;
  std::size_t next = 0;  // virtual index
};

// Given nodes prev < cur, the next node: the link(prev) run mirrored across cur, provided the stretch between is
// symmetric about cur and [prev, next] is quasi-p-symmetric. `bound` is inclusive; `open` says the pattern may
// continue past it.
StepOut step(const View& v, std::size_t prev, std::size_t cur, std::size_t bound, bool open) {
  const LinkId l = v.link(prev);
  std::size_t a = prev;
  while (a < bound && v.link(a + 1) == l) ++a;
  const std::size_t a1 = a + 1;
  if (a1 > cur) return {};
  const std::size_t b1 = 2 * cur - a1;
  for (std::size_t k = 1; cur >= a1 + k; ++k) {
    if (cur + k > bound) return {open ? SearchStatus::horizon : SearchStatus::blocked, 0};
    if (v.level(cur - k) != v.level(cur + k)) return {};
  }
  const std::size_t s0 = b1 + 1;
  if (s0 > bound) return {open ? SearchStatus::horizon : SearchStatus::blocked, 0};
  if (v.link(s0) != l) return {};
  std::size_t e0 = s0;
  while (e0 < bound && v.link(e0 + 1) == l) ++e0;
  if (e0 == bound && open) return {SearchStatus::horizon, 0};
  std::size_t next = s0;
  for (std::size_t i = s0 + 1; i <= e0; ++i)
    if (v.level(i) > v.level(next)) next = i;
  if (!quasi(v.w, v.real(prev), v.real(next))) return {};
  return {SearchStatus::found, next};
}

bool strictly_monotone(const ArcWindow& w, const std::vector<std::size_t>& nodes, std::size_t from, std::size_t to,
                       bool decreasing) {
  for (std::size_t i = from; i < to; ++i) {
    const Level a = w.level(nodes[i]);
    const Level b = w.level(nodes[i + 1]);
    if (decreasing ? !(a > b) : !(a < b)) return false;
  }
  return true;
}

bool all_basic(const ArcWindow& w, const std::vector<std::size_t>& nodes) {
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
    if (!is_basic_quasi(w.sub(nodes[i - 1], nodes[i + 1]))) return false;
  return true;
}

}  // namespace

PSymmetry is_p_symmetric(const ArcWindow& w) {
  if (!palindrome(w, w.start, w.end)) return {};
  return {true, (w.start + w.end) / 2};
}

std::optional<QuasiStructure> quasi_structure(const ArcWindow& w) { return quasi_at(w, w.start, w.end); }

bool is_quasi_p_symmetric(const ArcWindow& w) { return quasi_structure(w).has_value(); }

bool is_basic_quasi(const ArcWindow& w) {
  const auto qs = quasi_structure(w);
  if (!qs) throw InvalidInput("is_basic_quasi needs a quasi-p-symmetric window");
  for (std::size_t x = w.start + 1; x <= qs->midpoint; ++x)
    if (quasi(w, w.start, x)) return false;
  for (std::size_t x = qs->midpoint; x < w.end; ++x)
    if (quasi(w, x, w.end)) return false;
  return true;
}

bool is_link_symmetric(const ArcWindow& w) {
  std::vector<LinkId> seq;
  for (std::size_t i = w.start; i <= w.end; ++i) {
    const LinkId id = w.link(i);
    if (!seq.empty() && seq.back() == id) continue;
    if (w.links->ordered && !seq.empty() && seq.back() >= 0 && id >= 0) {
      const LinkId stepd = id > seq.back() ? 1 : -1;
      for (LinkId x = seq.back() + stepd; x != id; x += stepd) seq.push_back(x);
    }
    seq.push_back(id);
  }
  return std::equal(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(seq.size() / 2), seq.rbegin());
}

std::optional<QuasiChain> decompose_quasi_chain(const ArcWindow& w) {
  const View v{w, 1};
  const std::size_t x0 = argmax(w, w.start, run_end(w, w.start, w.end));
  const std::size_t last = argmax(w, run_start(w, w.end, w.start), w.end);
  for (std::size_t x1 = x0 + 1; x1 <= w.end; ++x1) {
    std::vector<std::size_t> nodes{x0, x1};
    bool ok = false;
    while (nodes.size() <= w.size()) {
      const auto r = step(v, nodes[nodes.size() - 2], nodes.back(), w.end, false);
      if (r.status != SearchStatus::found) break;
      nodes.push_back(r.next);
      if (r.next == last) {
        ok = true;
        break;
      }
    }
    if (!ok) continue;
    const std::size_t n = nodes.size() - 1;
    QuasiChain out;
    out.nodes = nodes;
    if (strictly_monotone(w, nodes, 1, n, true))
      out.direction = Direction::decreasing;
    else if (strictly_monotone(w, nodes, 0, n - 1, false))
      out.direction = Direction::increasing;
    else
      continue;
    out.basic = all_basic(w, nodes);
    return out;
  }
  return std::nullopt;
}

MaximalChain maximal_extension(const ArcWindow& w) {
  MaximalChain out;
  auto& nodes = out.chain.nodes;
  if (const auto qs = quasi_structure(w)) {
    nodes = {argmax(w, w.start, qs->left_tip_end), qs->midpoint, argmax(w, qs->right_tip_start, w.end)};
    out.chain.direction =
        w.level(nodes[1]) > w.level(nodes[2]) ? Direction::decreasing : Direction::increasing;
  } else if (auto ch = decompose_quasi_chain(w)) {
    out.chain = *ch;
  } else {
    throw InvalidInput("maximal_extension needs a quasi-p-symmetric window or a quasi chain");
  }
  const bool dec = out.chain.direction == Direction::decreasing;
  const std::size_t n = w.source->size();

  // forward: a new last node is free for increasing chains, below its predecessor for decreasing ones
  const View fwd{w, 1};
  for (;;) {
    const std::size_t k = nodes.size();
    if (!dec && !(w.level(nodes[k - 1]) > w.level(nodes[k - 2]))) break;
    const auto r = step(fwd, nodes[k - 2], nodes[k - 1], n - 1, true);
    if (r.status == SearchStatus::horizon) out.right = EndStatus::horizon;
    if (r.status != SearchStatus::found) break;
    if (dec && !(w.level(r.next) < w.level(nodes[k - 1]))) break;
    nodes.push_back(r.next);
  }
  const View bwd{w, -1};
  for (;;) {
    if (dec && !(w.level(nodes[0]) > w.level(nodes[1]))) break;
    const auto r = step(bwd, bwd.virt(nodes[1]), bwd.virt(nodes[0]), n - 1, true);
    if (r.status == SearchStatus::horizon) out.left = EndStatus::horizon;
    if (r.status != SearchStatus::found) break;
    const std::size_t x = bwd.real(r.next);
    if (!dec && !(w.level(x) < w.level(nodes[0]))) break;
    nodes.insert(nodes.begin(), x);
  }

  out.lo = nodes.front();
  out.hi = nodes.back();
  if (dec) {
    // x^{-1}: mirror of x^1 across x^0
    if (nodes[1] <= 2 * nodes[0] && palindrome(w, 2 * nodes[0] - nodes[1], nodes[1])) {
      out.lo = 2 * nodes[0] - nodes[1];
      out.extended = true;
    }
  } else {
    const std::size_t k = nodes.size();
    const std::size_t mirror = 2 * nodes[k - 1] - nodes[k - 2];
    if (mirror < n && palindrome(w, nodes[k - 2], mirror)) {
      out.hi = mirror;
      out.extended = true;
    }
  }
  out.chain.basic = all_basic(w, nodes);
  return out;
}

Classification classify_link_symmetric(const ArcWindow& w) {
  if (!is_link_symmetric(w)) throw InvalidInput("classify_link_symmetric needs a link-symmetric window");
  Classification out;
  if (palindrome(w, w.start, w.end)) return {SymmetryClass::P_SYMMETRIC, w.start, w.end, {}};

  // the proof works with the tip midpoints as endpoints
  const std::size_t u = argmax(w, w.start, run_end(w, w.start, w.end));
  const std::size_t v = argmax(w, run_start(w, w.end, w.start), w.end);
  // a single link run shrinks to one p-point, which is trivially symmetric
  if (u >= v) return {SymmetryClass::P_SYMMETRIC, u, u, {}};
  if (palindrome(w, u, v)) return {SymmetryClass::P_SYMMETRIC, u, v, {}};

  // centre link run of the collapsed link sequence
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = u; i <= v;) {
    const std::size_t e = run_end(w, i, v);
    runs.emplace_back(i, e);
    i = e + 1;
  }
  const auto& centre = runs[runs.size() / 2];
  const std::size_t m = argmax(w, centre.first, centre.second);
  std::size_t qlo = u;
  std::size_t qhi = v;
  for (std::size_t j = 1; m >= u + j && m + j <= v; ++j) {
    if (w.level(m - j) != w.level(m + j)) {
      qlo = m - j;
      qhi = m + j;
      break;
    }
  }
  const ArcWindow q = w.sub(qlo, qhi);
  if (!is_quasi_p_symmetric(q)) return {SymmetryClass::NONE, qlo, qhi, {}};

  const MaximalChain ext = maximal_extension(q);
  out.nodes = ext.chain.nodes;
  if (ext.lo <= u && ext.hi >= v) {
    out.cls = ext.chain.direction == Direction::decreasing ? SymmetryClass::MAXIMAL_DECREASING
                                                          : SymmetryClass::MAXIMAL_INCREASING;
    out.witness_lo = ext.lo;
    out.witness_hi = ext.hi;
    return out;
  }

  // otherwise look for the symmetric arc around the top node that joins an increasing and a decreasing chain
  const std::size_t top = *std::max_element(out.nodes.begin(), out.nodes.end(),
                                            [&](std::size_t a, std::size_t b) { return w.level(a) < w.level(b); });
  std::size_t r = 0;
  const std::size_t n = w.source->size();
  while (top >= r + 1 && top + r + 1 < n && w.level(top - r - 1) == w.level(top + r + 1)) ++r;
  const bool edge = top < r + 1 || top + r + 1 >= n;
  if (top - r <= std::min(u, ext.lo) && top + r >= std::max(v, ext.hi)) {
    out.cls = SymmetryClass::CONCAT_INC_DEC;
    out.witness_lo = top - r;
    out.witness_hi = top + r;
    return out;
  }
  const bool horizon = ext.left == EndStatus::horizon || ext.right == EndStatus::horizon || edge;
  out.cls = horizon ? SymmetryClass::INCONCLUSIVE : SymmetryClass::NONE;
  out.witness_lo = ext.lo;
  out.witness_hi = ext.hi;
  return out;
}

SymmetryClass describe(const ArcWindow& w) {
  if (is_p_symmetric(w).symmetric) return SymmetryClass::P_SYMMETRIC;
  if (is_quasi_p_symmetric(w)) return is_basic_quasi(w) ? SymmetryClass::BASIC_QUASI : SymmetryClass::QUASI_P_SYMMETRIC;
  if (const auto ch = decompose_quasi_chain(w))
    return ch->direction == Direction::decreasing ? SymmetryClass::DECREASING_QUASI : SymmetryClass::INCREASING_QUASI;
  if (is_link_symmetric(w)) return SymmetryClass::LINK_SYMMETRIC_ONLY;
  return SymmetryClass::NONE;
}

namespace {

struct BasicSetup {
  std::size_t x = 0;  // higher tip midpoint
  std::size_t y = 0;
  std::size_t m = 0;
};

BasicSetup basic_setup(const ArcWindow& w) {
  const auto qs = quasi_structure(w);
  if (!qs) throw InvalidInput("extension needs a quasi-p-symmetric window");
  if (!is_basic_quasi(w)) throw InvalidInput("extension needs a basic quasi-p-symmetric window");
  const std::size_t a = argmax(w, w.start, qs->left_tip_end);
  const std::size_t b = argmax(w, qs->right_tip_start, w.end);
  if (w.level(a) == w.level(b)) throw InvalidInput("tip midpoints share a level");
  return w.level(a) > w.level(b) ? BasicSetup{a, b, qs->midpoint} : BasicSetup{b, a, qs->midpoint};
}

// [m, m'] symmetric about c, or failing that quasi-p-symmetric about c
ExtensionPoint extend_about(const ArcWindow& w, std::size_t m, std::size_t c) {
  const View v{w, c > m ? 1 : -1};
  const std::size_t vm = v.virt(m);
  const std::size_t vc = v.virt(c);
  const std::size_t mirror = 2 * vc - vm;
  bool mismatch = false;
  for (std::size_t k = 1; k <= vc - vm; ++k) {
    if (vc + k >= v.n()) return {SearchStatus::horizon, 0};
    if (v.level(vc - k) != v.level(vc + k)) {
      mismatch = true;
      break;
    }
  }
  if (!mismatch) return {SearchStatus::found, v.real(mirror)};
  const auto r = step(v, vm, vc, v.n() - 1, true);
  return {r.status, r.status == SearchStatus::found ? v.real(r.next) : 0};
}

}  // namespace

ExtensionPoint extend_high(const ArcWindow& w) {
  const auto b = basic_setup(w);
  return extend_about(w, b.m, b.x);
}

ExtensionPoint extend_low(const ArcWindow& w) {
  const auto b = basic_setup(w);
  return extend_about(w, b.m, b.y);
}

}  // namespace tentlim
