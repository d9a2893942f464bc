#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crosslab/errors.hpp"
#include "crosslab/family.hpp"

namespace crosslab {

enum class Verdict : std::uint8_t { Holds, Violated, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

// Lower bounds must sit strictly below the observed value, upper bounds at or
// above it; Exact checks equality and WithinFactor2 checks bound/2 <= observed <= 2 bound.
enum class BoundSide : std::uint8_t { Lower, Upper, Exact, WithinFactor2 };

inline const char* to_string(BoundSide s) {
  switch (s) {
    case BoundSide::Lower: return "lower";
    case BoundSide::Upper: return "upper";
    case BoundSide::Exact: return "exact";
    case BoundSide::WithinFactor2: return "within-factor-2";
  }
  return "lower";
}

struct BoundInputs {
  std::optional<std::uint64_t> m;
  std::optional<int> g;
  std::optional<int> n;
  std::optional<int> chi;
  std::optional<std::uint64_t> k;
  std::optional<double> L;
};

struct BoundReport {
  std::string theorem;
  BoundSide side = BoundSide::Lower;
  BoundInputs inputs;
  double bound = 0;
  std::optional<std::uint64_t> observed;
  bool applicable = false;
  Verdict verdict = Verdict::NotApplicable;
  std::string note;
};

inline constexpr double kNearEquality = 1e-9;

inline const double kE6 = std::exp(6.0);

// Threshold e^6 (|chi| + 1) above which the crossing lower bounds apply.
inline double lower_threshold(int abs_chi) { return kE6 * (abs_chi + 1); }

namespace detail {

inline int abs_chi_of(int chi) {
  if (chi >= 0) throw InvalidSurface("Euler characteristic must be negative, got " + std::to_string(chi));
  return -chi;
}

}  // namespace detail

// Fills in observed and verdict.
inline BoundReport judge(BoundReport r, std::uint64_t observed) {
  r.observed = observed;
  if (!r.applicable) {
    r.verdict = Verdict::NotApplicable;
    return r;
  }
  const double obs = static_cast<double>(observed);
  const bool near = std::abs(obs - r.bound) <= kNearEquality * std::max(std::abs(r.bound), 1.0);
  if (r.side == BoundSide::Exact) {
    r.verdict = obs == r.bound ? Verdict::Holds : Verdict::Violated;
  } else if (r.side == BoundSide::WithinFactor2) {
    r.verdict = obs >= r.bound / 2 && obs <= 2 * r.bound ? Verdict::Holds : Verdict::Violated;
  } else if (r.side == BoundSide::Lower) {
    if (r.bound <= 0) {
      r.verdict = Verdict::Holds;
      r.note = "vacuous";
    } else if (obs > r.bound) {
      r.verdict = Verdict::Holds;
    } else if (near) {
      r.verdict = Verdict::Holds;
      r.note = "indeterminate: within 1e-9 of the bound";
    } else {
      r.verdict = Verdict::Violated;
    }
  } else {
    if (obs <= r.bound) {
      r.verdict = Verdict::Holds;
    } else if (near) {
      r.verdict = Verdict::Holds;
      r.note = "indeterminate: within 1e-9 of the bound";
    } else {
      r.verdict = Verdict::Violated;
    }
  }
  return r;
}

// cr > (1/(128|chi|)) (m log(m / ((|chi|+1) e^6)))^2 for m >= e^6 (|chi|+1).
inline BoundReport thm_curves_lower(std::uint64_t m, int chi) {
  const int x = detail::abs_chi_of(chi);
  const double md = static_cast<double>(m);
  BoundReport r;
  r.theorem = "curves-lower";
  r.side = BoundSide::Lower;
  r.inputs.m = m;
  r.inputs.chi = chi;
  r.applicable = md >= lower_threshold(x);
  double t = md * std::log(md / lower_threshold(x));
  r.bound = m == 0 ? 0.0 : t * t / (128.0 * x);
  r.verdict = r.applicable ? Verdict::Holds : Verdict::NotApplicable;
  return r;
}

// cr >= (1/(512|chi|)) m^2 (log^2(m / (e^6 (|chi|+1))) - 256 |chi|), chi = 2 - 2g - n.
inline BoundReport thm_graphs_lower(std::uint64_t m, int g, int n) {
  const int chi = 2 - 2 * g - n;
  const int x = detail::abs_chi_of(chi);
  const double md = static_cast<double>(m);
  BoundReport r;
  r.theorem = "graphs-lower";
  r.side = BoundSide::Lower;
  r.inputs.m = m;
  r.inputs.g = g;
  r.inputs.n = n;
  r.inputs.chi = chi;
  r.applicable = md >= lower_threshold(x);
  double l = m == 0 ? 0.0 : std::log(md / lower_threshold(x));
  r.bound = md * md * (l * l - 256.0 * x) / (512.0 * x);
  r.verdict = r.applicable ? Verdict::Holds : Verdict::NotApplicable;
  if (r.applicable && r.bound <= 0) r.note = "vacuous";
  return r;
}

inline double cor_curves_max(std::uint64_t k, int chi) {
  if (k < 1) throw std::invalid_argument("cor_curves_max: k must be >= 1");
  const int x = detail::abs_chi_of(chi);
  return std::exp(6.0 * std::sqrt(2.0 * static_cast<double>(k) * x) + std::log(x + 1.0) + 6.0);
}

inline double cor_arcs_max(std::uint64_t k, int chi) {
  if (k < 1) throw std::invalid_argument("cor_arcs_max: k must be >= 1");
  const int x = detail::abs_chi_of(chi);
  return std::exp(24.0 * std::sqrt((static_cast<double>(k) + 1.0) * x) + std::log(x + 1.0) + 6.0);
}

inline BoundReport size_upper(FamilyKind kind, std::uint64_t k, int chi) {
  BoundReport r;
  r.theorem = kind == FamilyKind::Curves ? "curves-max-size" : "arcs-max-size";
  r.side = BoundSide::Upper;
  r.inputs.k = k;
  r.inputs.chi = chi;
  r.bound = kind == FamilyKind::Curves ? cor_curves_max(k, chi) : cor_arcs_max(k, chi);
  r.applicable = true;
  r.verdict = Verdict::Holds;
  return r;
}

enum class UpperContext : std::uint8_t {
  PantsArcs,      // (m(m+1)/2) (log2(2m/3))^2
  PantsCurves,    // 2m(m+1) (log2(4m/3))^2
  SphereArcs,     // (m^2/(n-2)) (log2(8m/(n-2)))^2
  SurfaceCurves,  // (m^2/|chi|) (log2(4m/(3|chi|)))^2
};

inline const char* theorem_id(UpperContext c) {
  switch (c) {
    case UpperContext::PantsArcs: return "pants-arcs-upper";
    case UpperContext::PantsCurves: return "pants-curves-upper";
    case UpperContext::SphereArcs: return "sphere-arcs-upper";
    case UpperContext::SurfaceCurves: return "surface-curves-upper";
  }
  throw UnknownContext("unknown construction context");
}

// `param` is n for sphere arcs and |chi| for surface curves; ignored otherwise.
inline BoundReport construction_uppers(std::uint64_t m, UpperContext ctx, int param = 0) {
  const double md = static_cast<double>(m);
  BoundReport r;
  r.theorem = theorem_id(ctx);
  r.side = BoundSide::Upper;
  r.inputs.m = m;
  r.applicable = true;
  r.verdict = Verdict::Holds;
  auto sq = [](double v) { return v * v; };
  switch (ctx) {
    case UpperContext::PantsArcs:
      r.bound = md * (md + 1) / 2 * sq(std::log2(2 * md / 3));
      break;
    case UpperContext::PantsCurves:
      r.bound = 2 * md * (md + 1) * sq(std::log2(4 * md / 3));
      break;
    case UpperContext::SphereArcs: {
      if (param < 3) throw UnknownContext("sphere context needs n >= 3");
      r.inputs.n = param;
      const double b = param - 2;
      r.bound = md * md / b * sq(std::log2(8 * md / b));
      break;
    }
    case UpperContext::SurfaceCurves: {
      if (param < 1) throw UnknownContext("surface context needs |chi| >= 1");
      r.inputs.chi = -param;
      r.bound = md * md / param * sq(std::log2(4 * md / (3.0 * param)));
      break;
    }
    default:
      throw UnknownContext("unknown construction context");
  }
  if (m == 0) r.bound = 0;
  return r;
}

inline double lemma_buser_bound(int g, int n, double L) {
  if (2 - 2 * g - n >= 0) throw InvalidSurface("surface is not hyperbolic");
  return (g + (n + 1) / 2 - 1) * std::exp(L + 6);
}

// Construction envelopes that apply to a family by how it was generated.
inline std::vector<std::pair<UpperContext, int>> construction_contexts(const Family& f) {
  switch (f.origin) {
    case Construction::PantsArcs: return {{UpperContext::PantsArcs, 0}};
    case Construction::PantsCurves:
      return {{UpperContext::PantsCurves, 0}, {UpperContext::SurfaceCurves, f.surface.abs_euler()}};
    case Construction::CuffAnchored: return {{UpperContext::SphereArcs, 3}};
    case Construction::SphereArcs: return {{UpperContext::SphereArcs, f.surface.punctures}};
    case Construction::SurfaceCurves: return {{UpperContext::SurfaceCurves, f.surface.abs_euler()}};
    case Construction::Custom: return {};
  }
  return {};
}

// Every inequality applicable to the family: the crossing lower bound for its
// kind, the size bound for its largest pairwise intersection `max_pair`
// (taken as at least 1), and the construction envelopes for its origin.
inline std::vector<BoundReport> verify(const Family& f, std::uint64_t observed_cr, std::uint64_t max_pair) {
  std::vector<BoundReport> out;
  const std::uint64_t m = f.size();
  const int chi = f.surface.euler();
  const std::uint64_t k = std::max<std::uint64_t>(1, max_pair);
  if (f.kind == FamilyKind::Curves)
    out.push_back(judge(thm_curves_lower(m, chi), observed_cr));
  else
    out.push_back(judge(thm_graphs_lower(m, f.surface.genus, f.surface.punctures), observed_cr));
  BoundReport size = size_upper(f.kind, k, chi);
  size.inputs.m = m;
  out.push_back(judge(size, m));
  for (auto [ctx, param] : construction_contexts(f)) out.push_back(judge(construction_uppers(m, ctx, param), observed_cr));
  return out;
}

}  // namespace crosslab
