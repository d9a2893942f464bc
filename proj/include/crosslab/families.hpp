#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosslab/errors.hpp"
#include "crosslab/family.hpp"
#include "crosslab/pants.hpp"

namespace crosslab {

inline constexpr Surface kPants{0, 3};

inline Family pants_arc_family(int L, std::uint64_t cap = census_cap()) {
  if (L < 1) throw std::invalid_argument("pants_arc_family: L must be >= 1");
  Family f{kPants, FamilyKind::Arcs, Construction::PantsArcs, {}};
  f.blocks.push_back({1, enumerate_arcs(L, cap), {}});
  return f;
}

inline std::uint64_t cuff_anchored_size(int L) {
  if (L < 3) return 0;
  if (L - 3 > 62) return ~std::uint64_t{0};
  return std::uint64_t{1} << (L - 3);
}

// Arcs with both ends on `cuff`: leave the cuff through the edge opposite it,
// take L-3 turns, and come back to the cuff, inserting that edge once more if
// the path did not arrive through it. Lengths are L-1 or L.
inline std::vector<ArcClass> cuff_anchored_arcs(int L, int cuff, std::uint64_t cap = census_cap()) {
  if (L < 3) throw std::invalid_argument("cuff_anchored_family: L must be >= 3");
  if (cuff < 1 || cuff > 3) throw std::invalid_argument("cuff_anchored_family: cuff must be 1..3");
  std::uint64_t need = cuff_anchored_size(L);
  if (need > cap) throw CapExceeded(need, cap);
  const auto c = static_cast<std::uint8_t>(cuff);
  const std::size_t nturns = static_cast<std::size_t>(L - 3);
  std::set<ArcClass> out;
  for (Side s : {Side::Front, Side::Back}) {
    const Label through = ribbon::edge_opposite_cuff(s, c);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nturns); ++mask) {
      Word interior{through};
      Side at = flip(s);
      for (std::size_t i = 0; i < nturns; ++i) {
        Turn t = ((mask >> (nturns - 1 - i)) & 1) ? Turn::Right : Turn::Left;
        interior.push_back(ribbon::turn_edge(at, interior.back(), t));
        at = flip(at);
      }
      if (interior.back() != through) {
        interior.push_back(through);
        at = flip(at);
      }
      out.insert(make_arc({s, c}, interior, {at, c}));
    }
  }
  return {out.begin(), out.end()};
}

inline Family cuff_anchored_family(int L, int cuff, std::uint64_t cap = census_cap()) {
  Family f{kPants, FamilyKind::Arcs, Construction::CuffAnchored, {}};
  f.blocks.push_back({1, {}, {}});
  f.blocks[0].arcs = cuff_anchored_arcs(L, cuff, cap);
  return f;
}

inline Family pants_curve_family(int L, std::uint64_t cap = census_cap()) {
  if (L < 2) throw std::invalid_argument("pants_curve_family: L must be >= 2");
  Family f{kPants, FamilyKind::Curves, Construction::PantsCurves, {}};
  f.blocks.push_back({1, {}, enumerate_curves(L, cap)});
  return f;
}

// New classes of length exactly L, against the estimate 3 * 2^(L-2) / L.
struct CurveCensusRow {
  int length = 0;
  std::uint64_t exact = 0;
  double reference = 0;
};

inline double curve_count_reference(int L) { return 3.0 * std::ldexp(1.0, L - 2) / L; }

inline std::vector<CurveCensusRow> curve_census_table(int max_length) {
  std::vector<CurveCensusRow> rows;
  for (int L = 2; L <= max_length; L += 2)
    rows.push_back({L, curves_of_length(L).size(), curve_count_reference(L)});
  return rows;
}

// Boundary of a neighbourhood of the arc and its two cuffs: the arc, once
// around the end cuff, back along the arc, once around the start cuff. Both
// cuff loops keep the cuff on the left.
inline CurveClass arc_to_curve(const ArcClass& a) {
  const Side x = a.start().side;
  const Side y = a.end().side;
  Word walk(a.interior().begin(), a.interior().end());
  walk.push_back(ribbon::edge_before_cuff(y, a.end().cuff));
  walk.push_back(ribbon::edge_after_cuff(y, a.end().cuff));
  walk.insert(walk.end(), a.interior().rbegin(), a.interior().rend());
  walk.push_back(ribbon::edge_before_cuff(x, a.start().cuff));
  walk.push_back(ribbon::edge_after_cuff(x, a.start().cuff));

  // Free reduction, then cyclic reduction; each trimmed end pair moves the start one vertex on.
  Word red;
  for (Label e : walk) {
    if (!red.empty() && red.back() == e) red.pop_back();
    else red.push_back(e);
  }
  std::size_t lo = 0, hi = red.size();
  Side start = x;
  while (hi - lo >= 2 && red[lo] == red[hi - 1]) {
    ++lo;
    --hi;
    start = flip(start);
  }
  Word cyc(red.begin() + static_cast<std::ptrdiff_t>(lo), red.begin() + static_cast<std::ptrdiff_t>(hi));
  if (cyc.empty()) throw std::logic_error("arc_to_curve: doubled walk is trivial");
  if (start == Side::Back) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  return make_curve(cyc);
}

struct AssemblySpec {
  Surface surface;
  FamilyKind kind = FamilyKind::Curves;
  int L = 4;
  // Designated cuff per block for arc assemblies; empty means the default chain policy.
  std::vector<int> anchors;
};

// Linear chain of pants on the n-punctured sphere: block 1 carries two
// punctures on cuffs 1 and 2, each later block its puncture on cuff 2 (the last
// one also on cuff 3). The designated cuff is the smallest puncture cuff.
inline int default_anchor(int block, int /*blocks*/) { return block == 1 ? 1 : 2; }

inline Family assemble(const AssemblySpec& spec, std::uint64_t cap = census_cap()) {
  const Surface& s = spec.surface;
  if (s.genus < 0 || s.punctures < 0) throw InvalidSurface("negative genus or puncture count");
  if (spec.kind == FamilyKind::Arcs) {
    if (s.genus != 0 || s.punctures < 3)
      throw InvalidSurface("arc assembly needs a sphere with at least 3 punctures");
    const int blocks = s.punctures - 2;
    if (!spec.anchors.empty() && static_cast<int>(spec.anchors.size()) != blocks)
      throw std::invalid_argument("assemble: one anchor per block required");
    std::uint64_t need = static_cast<std::uint64_t>(blocks) * cuff_anchored_size(spec.L);
    if (need > cap) throw CapExceeded(need, cap);
    Family f{s, FamilyKind::Arcs, Construction::SphereArcs, {}};
    for (int b = 1; b <= blocks; ++b) {
      int anchor = spec.anchors.empty() ? default_anchor(b, blocks) : spec.anchors[b - 1];
      f.blocks.push_back({b, cuff_anchored_arcs(spec.L, anchor, cap), {}});
    }
    return f;
  }
  if (!s.hyperbolic()) throw InvalidSurface("curve assembly needs 2g-2+n >= 1");
  const int blocks = s.abs_euler();
  auto curves = enumerate_curves(spec.L, cap);
  std::uint64_t need = static_cast<std::uint64_t>(blocks) * curves.size();
  if (need > cap) throw CapExceeded(need, cap);
  Family f{s, FamilyKind::Curves, Construction::SurfaceCurves, {}};
  for (int b = 1; b <= blocks; ++b) f.blocks.push_back({b, {}, curves});
  return f;
}

}  // namespace crosslab
