#pragma once

// Verification suites: each check is reported as a BoundReport so that the
// whole run reduces to a single list of verdicts.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosslab/bounds.hpp"
#include "crosslab/families.hpp"
#include "crosslab/hyperbolic.hpp"
#include "crosslab/intersection.hpp"
#include "crosslab/parallel.hpp"

namespace crosslab {

struct SuiteOptions {
  std::optional<int> max_length;  // suite default when empty
  unsigned jobs = 1;
  std::array<double, 3> cuffs{2.0, 2.0, 2.0};
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"census-counts", "quadratic-lemma",   "doubling",
                                              "oracle-equivalence", "lower-bounds", "upper-bounds",
                                              "hyperbolic-checks"};
  return names;
}

namespace detail {

inline BoundReport check(std::string id, BoundSide side, double bound, std::uint64_t observed,
                         std::optional<double> L = std::nullopt) {
  BoundReport r;
  r.theorem = std::move(id);
  r.side = side;
  r.bound = bound;
  r.applicable = true;
  r.inputs.L = L;
  return judge(r, observed);
}

// Counts pairs (i <= j) for which pred(i, j) holds, in parallel.
template <class Pred>
std::uint64_t count_pairs(std::size_t n, unsigned jobs, Pred&& pred) {
  std::vector<std::uint64_t> per_row(n, 0);
  parallel_for(n, jobs, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j)
      if (pred(i, j)) ++per_row[i];
  });
  std::uint64_t total = 0;
  for (auto c : per_row) total += c;
  return total;
}

inline std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

inline std::vector<BoundReport> suite_census_counts(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(12);
  std::vector<BoundReport> out;
  for (int l = 1; l <= L; ++l)
    out.push_back(detail::check("arc-census", BoundSide::Exact, static_cast<double>(arc_census_size(l)),
                                enumerate_arcs(l).size(), l));
  for (int l = 2; l <= std::min(L, 12); l += 2) {
    std::uint64_t exact = curves_of_length(l).size();
    if (l <= 4)
      out.push_back(detail::check("curve-census", BoundSide::Exact, 3, exact, l));
    else
      out.push_back(detail::check("curve-census", BoundSide::WithinFactor2, curve_count_reference(l), exact, l));
  }
  for (int l = 3; l <= L; ++l)
    for (int c = 1; c <= 3; ++c) {
      auto arcs = cuff_anchored_arcs(l, c);
      bool anchored = std::all_of(arcs.begin(), arcs.end(), [&](const ArcClass& a) {
        return a.start().cuff == c && a.end().cuff == c &&
               (static_cast<int>(a.length()) == l - 1 || static_cast<int>(a.length()) == l);
      });
      BoundReport r = detail::check("cuff-anchored-census", BoundSide::Exact,
                                    static_cast<double>(cuff_anchored_size(l)), anchored ? arcs.size() : 0, l);
      r.inputs.k = static_cast<std::uint64_t>(c);
      r.note = "k is the anchor cuff";
      out.push_back(std::move(r));
    }
  return out;
}

// i(a,b) <= ceil(len a) * ceil(len b) over every pair, self-pairs included.
inline std::vector<BoundReport> suite_quadratic_lemma(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(8);
  const int La = std::max(1, L - 2);
  std::vector<BoundReport> out;
  {
    auto curves = enumerate_curves(L);
    std::vector<Lift> lifts(curves.begin(), curves.end());
    auto bad = detail::count_pairs(curves.size(), opt.jobs, [&](std::size_t i, std::size_t j) {
      return intersection_number(lifts[i], lifts[j]) >
             static_cast<std::uint64_t>(curves[i].length() * curves[j].length());
    });
    out.push_back(detail::check("quadratic-lemma-curves", BoundSide::Upper, 0, bad, L));
  }
  {
    auto arcs = enumerate_arcs(La);
    std::vector<Lift> lifts(arcs.begin(), arcs.end());
    auto bad = detail::count_pairs(arcs.size(), opt.jobs, [&](std::size_t i, std::size_t j) {
      return arc_intersection(lifts[i], lifts[j]) > static_cast<std::uint64_t>(arcs[i].length() * arcs[j].length());
    });
    out.push_back(detail::check("quadratic-lemma-arcs", BoundSide::Upper, 0, bad, La));
  }
  return out;
}

// Number of (end of a, end of b) pairs landing on the same cuff.
inline int shared_end_cuffs(const ArcClass& a, const ArcClass& b) {
  int s = 0;
  for (int x : {a.start().cuff, a.end().cuff})
    for (int y : {b.start().cuff, b.end().cuff}) s += x == y;
  return s;
}

inline std::vector<BoundReport> suite_doubling(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(6);
  auto arcs = enumerate_arcs(L);
  std::vector<CurveClass> doubled;
  for (const auto& a : arcs) doubled.push_back(arc_to_curve(a));
  std::vector<Lift> la(arcs.begin(), arcs.end()), lg(doubled.begin(), doubled.end());
  std::set<CurveClass> distinct(doubled.begin(), doubled.end());
  std::vector<BoundReport> out;
  out.push_back(detail::check("doubling-injective", BoundSide::Exact, static_cast<double>(arcs.size()),
                              distinct.size(), L));
  std::vector<std::uint64_t> plain(arcs.size()), refined(arcs.size());
  parallel_for(arcs.size(), opt.jobs, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      std::uint64_t ia = arc_intersection(la[i], la[j]);
      std::uint64_t ig = intersection_number(lg[i], lg[j]);
      if (ig > 4 * ia + 4) ++plain[i];
      if (ig > 4 * ia + 2 * static_cast<std::uint64_t>(shared_end_cuffs(arcs[i], arcs[j]))) ++refined[i];
    }
  });
  std::uint64_t p = 0, r = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    p += plain[i];
    r += refined[i];
  }
  out.push_back(detail::check("doubling-inequality", BoundSide::Upper, 0, p, L));
  out.push_back(detail::check("doubling-shared-ends", BoundSide::Upper, 0, r, L));
  return out;
}

inline std::vector<BoundReport> suite_oracle_equivalence(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(6);
  const PantsRep rep = pants_representation(opt.cuffs[0], opt.cuffs[1], opt.cuffs[2]);
  std::vector<BoundReport> out;
  {
    auto curves = enumerate_curves(L);
    std::vector<Lift> lifts(curves.begin(), curves.end());
    std::atomic<std::uint64_t> unconverged{0};
    auto bad = detail::count_pairs(curves.size(), opt.jobs, [&](std::size_t i, std::size_t j) {
      std::uint64_t comb = intersection_number(lifts[i], lifts[j]);
      int R = static_cast<int>(curves[i].length() + curves[j].length());
      try {
        std::uint64_t orc = oracle_intersection_adaptive(curves[i], curves[j], rep, R, 24);
        return comb != orc;
      } catch (const NotConverged&) {
        ++unconverged;
        return true;
      }
    });
    out.push_back(detail::check("oracle-curves", BoundSide::Upper, 0, bad, L));
    out.push_back(detail::check("oracle-curves-unconverged", BoundSide::Upper, 0, unconverged.load(), L));
  }
  {
    const int La = std::min(L, 4);
    auto arcs = enumerate_arcs(La);
    std::vector<Lift> lifts(arcs.begin(), arcs.end());
    std::atomic<std::uint64_t> unconverged{0};
    auto bad = detail::count_pairs(arcs.size(), opt.jobs, [&](std::size_t i, std::size_t j) {
      std::uint64_t comb = arc_intersection(lifts[i], lifts[j]);
      int R = static_cast<int>(arcs[i].length() + arcs[j].length()) + 2;
      for (;; R += 2) {
        OracleResult o = oracle_arc_intersection_raw(arcs[i], arcs[j], rep, R);
        if (o.converged) return comb != o.count;
        if (R + 2 > 24) {
          ++unconverged;
          return true;
        }
      }
    });
    out.push_back(detail::check("oracle-arcs", BoundSide::Upper, 0, bad, La));
    out.push_back(detail::check("oracle-arcs-unconverged", BoundSide::Upper, 0, unconverged.load(), La));
  }
  return out;
}

// Lower and upper envelopes never cross: |chi| in 1..10, m log-swept over [threshold, 1e6].
inline std::uint64_t formula_sandwich_crossings(int samples = 200) {
  std::uint64_t bad = 0;
  for (int x = 1; x <= 10; ++x) {
    const double lo = std::ceil(lower_threshold(x)), hi = 1e6;
    for (int s = 0; s <= samples; ++s) {
      auto m = static_cast<std::uint64_t>(std::llround(lo * std::pow(hi / lo, static_cast<double>(s) / samples)));
      if (thm_curves_lower(m, -x).bound > construction_uppers(m, UpperContext::SurfaceCurves, x).bound) ++bad;
    }
  }
  return bad;
}

inline std::vector<BoundReport> family_reports(const Family& f, int L, unsigned jobs) {
  CrossingStats stats = crossing_stats(f, jobs);
  auto reports = verify(f, stats.crossing, stats.max_pair);
  for (auto& r : reports) {
    r.inputs.L = L;
    if (!r.inputs.m) r.inputs.m = f.size();
  }
  return reports;
}

inline std::vector<BoundReport> suite_lower_bounds(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(14);
  std::vector<BoundReport> out = family_reports(pants_curve_family(L), L, opt.jobs);
  const int La = std::min(L, 8);
  auto arcs = family_reports(pants_arc_family(La), La, opt.jobs);
  out.insert(out.end(), arcs.begin(), arcs.end());
  out.push_back(detail::check("formula-sandwich", BoundSide::Upper, 0, formula_sandwich_crossings()));
  return out;
}

inline std::vector<BoundReport> suite_upper_bounds(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(8);
  std::vector<BoundReport> out;
  auto add = [&](const Family& f, int l) {
    auto r = family_reports(f, l, opt.jobs);
    out.insert(out.end(), r.begin(), r.end());
  };
  for (int l = 1; l <= L; ++l) add(pants_arc_family(l), l);
  for (int l = 2; l <= L + 2; l += 2) add(pants_curve_family(l), l);
  for (int l = 3; l <= L; ++l)
    for (int c = 1; c <= 3; ++c) add(cuff_anchored_family(l, c), l);
  for (int n = 3; n <= 5; ++n)
    for (int l = 3; l <= L; ++l) add(assemble({{0, n}, FamilyKind::Arcs, l, {}}), l);
  for (Surface s : {Surface{0, 3}, Surface{2, 0}, Surface{1, 3}})
    for (int l = 2; l <= L; l += 2) add(assemble({s, FamilyKind::Curves, l, {}}), l);
  return out;
}

inline std::vector<BoundReport> suite_hyperbolic_checks(const SuiteOptions& opt) {
  const int L = opt.max_length.value_or(8);
  const PantsRep rep = pants_representation(opt.cuffs[0], opt.cuffs[1], opt.cuffs[2]);
  std::vector<BoundReport> out;
  for (int l = 2; l <= L; l += 2) {
    CensusCheck c = geodesic_census_check(rep, l, std::max<double>(L, kDefaultCensusLengthCap));
    BoundReport r = detail::check("geodesic-count", BoundSide::Upper, c.bound, c.count, l);
    r.inputs.g = 0;
    r.inputs.n = 3;
    out.push_back(std::move(r));
  }
  auto census = length_spectrum(rep, L);
  for (double lambda : {0.5, 1.0, 2.0}) {
    std::uint64_t bad = 0;
    double sum = 0;
    for (std::size_t m = 1; m <= census.size(); ++m) {
      sum += census[m - 1].length;
      double b = average_length_bound(m, lambda);
      if (b > 0 && !(sum > b)) ++bad;
    }
    BoundReport r = detail::check("average-length", BoundSide::Upper, 0, bad, L);
    r.inputs.m = census.size();
    r.note = "lambda=" + detail::short_double(lambda) + "; observed counts m with sum <= bound";
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<BoundReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "census-counts") return suite_census_counts(opt);
  if (name == "quadratic-lemma") return suite_quadratic_lemma(opt);
  if (name == "doubling") return suite_doubling(opt);
  if (name == "oracle-equivalence") return suite_oracle_equivalence(opt);
  if (name == "lower-bounds") return suite_lower_bounds(opt);
  if (name == "upper-bounds") return suite_upper_bounds(opt);
  if (name == "hyperbolic-checks") return suite_hyperbolic_checks(opt);
  if (name == "all") {
    SuiteOptions each = opt;
    each.max_length.reset();
    std::vector<BoundReport> out;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, each);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline bool all_hold(const std::vector<BoundReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.verdict == Verdict::Violated; });
}

}  // namespace crosslab
