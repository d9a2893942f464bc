#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosslab/errors.hpp"
#include "crosslab/pants.hpp"

namespace crosslab {

struct Surface {
  int genus = 0;
  int punctures = 3;

  constexpr int euler() const noexcept { return 2 - 2 * genus - punctures; }
  constexpr int abs_euler() const noexcept { return -euler(); }
  constexpr bool hyperbolic() const noexcept { return genus >= 0 && punctures >= 0 && euler() < 0; }

  friend constexpr bool operator==(const Surface&, const Surface&) = default;
};

enum class FamilyKind : std::uint8_t { Arcs, Curves };

inline const char* to_string(FamilyKind k) { return k == FamilyKind::Arcs ? "arcs" : "curves"; }

// Which generator produced a family; selects the applicable construction bound.
enum class Construction : std::uint8_t {
  Custom,
  PantsArcs,      // every arc of length <= L on one pants
  CuffAnchored,   // arcs with both ends on one cuff
  PantsCurves,    // every primitive curve of length <= L on one pants
  SphereArcs,     // punctured-sphere assembly of cuff-anchored blocks
  SurfaceCurves,  // |chi| pants blocks of curve families
};

inline const char* to_string(Construction c) {
  switch (c) {
    case Construction::Custom: return "custom";
    case Construction::PantsArcs: return "pants-arcs";
    case Construction::CuffAnchored: return "cuff-anchored";
    case Construction::PantsCurves: return "pants-curves";
    case Construction::SphereArcs: return "sphere-arcs";
    case Construction::SurfaceCurves: return "surface-curves";
  }
  return "custom";
}

// Classes living on one pants block. Only the vector matching the family kind is used.
struct Block {
  int id = 1;
  std::vector<ArcClass> arcs;
  std::vector<CurveClass> curves;
};

struct Family {
  Surface surface;
  FamilyKind kind = FamilyKind::Curves;
  Construction origin = Construction::Custom;
  std::vector<Block> blocks;

  std::size_t size() const {
    std::size_t m = 0;
    for (const auto& b : blocks) m += kind == FamilyKind::Arcs ? b.arcs.size() : b.curves.size();
    return m;
  }
};

// Surface hyperbolic, members of each block pairwise distinct.
inline void validate(const Family& f) {
  if (!f.surface.hyperbolic())
    throw InvalidSurface("surface (g=" + std::to_string(f.surface.genus) + ", n=" +
                         std::to_string(f.surface.punctures) + ") has non-negative Euler characteristic");
  for (const auto& b : f.blocks) {
    if (f.kind == FamilyKind::Arcs) {
      std::set<ArcClass> seen(b.arcs.begin(), b.arcs.end());
      if (seen.size() != b.arcs.size())
        throw std::invalid_argument("block " + std::to_string(b.id) + " repeats an arc class");
      if (!b.curves.empty()) throw std::invalid_argument("arc family block carries curves");
    } else {
      std::set<CurveClass> seen(b.curves.begin(), b.curves.end());
      if (seen.size() != b.curves.size())
        throw std::invalid_argument("block " + std::to_string(b.id) + " repeats a curve class");
      if (!b.arcs.empty()) throw std::invalid_argument("curve family block carries arcs");
    }
  }
}

}  // namespace crosslab
