#pragma once

// A Fuchsian realization of the pants group and a metric intersection oracle.
//
// Edge walks are translated to group elements with the front vertex as base
// point and edge 1 as the spanning tree: traversing edge i from front to back
// contributes T_i, from back to front T_i^-1, where
//
//   T_1 = I,   T_2 = A^-1,   T_3 = (AB)^-1.
//
// The cuff words then map to (1,2) -> A, (2,3) -> B, (1,3) -> AB, so the three
// cuffs are A, B and (AB)^-1 up to conjugacy and inversion.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crosslab/errors.hpp"
#include "crosslab/pants.hpp"

namespace crosslab {

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double trace() const noexcept { return a + d; }
  double det() const noexcept { return a * d - b * c; }
  // Inverse of a unit-determinant matrix.
  Mat2 inverse() const noexcept { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) noexcept {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

// Point of the boundary circle as a projective vector (x : y), i.e. x/y in R u {inf}.
struct Vec2 {
  double x = 0, y = 1;
};

inline Vec2 operator*(const Mat2& m, const Vec2& v) noexcept {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

inline Vec2 normalized(Vec2 v) noexcept {
  double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

// Angle in [0, pi) parametrizing the projective line.
inline double projective_angle(Vec2 v) noexcept {
  double t = std::atan2(v.y, v.x);
  if (t < 0) t += std::numbers::pi;
  if (t >= std::numbers::pi) t -= std::numbers::pi;
  return t;
}

inline double translation_length(const Mat2& m) {
  double t = std::abs(m.trace());
  if (!(t > 2.0)) throw NonHyperbolicImage("|trace| = " + std::to_string(t) + " is not > 2");
  return 2.0 * std::acosh(t / 2.0);
}

// Fixed points of a hyperbolic element: (attracting, repelling).
inline std::pair<Vec2, Vec2> fixed_points(const Mat2& m) {
  double tr = m.trace();
  double disc = tr * tr - 4.0;
  if (!(disc > 0)) throw NonHyperbolicImage("element is not hyperbolic");
  double s = std::sqrt(disc);
  // Larger |eigenvalue| first.
  double mu_big = tr > 0 ? (tr + s) / 2 : (tr - s) / 2;
  double mu_small = 1.0 / mu_big;
  auto eigvec = [&](double mu) {
    Vec2 v1{m.b, mu - m.a}, v2{mu - m.d, m.c};
    return std::hypot(v1.x, v1.y) >= std::hypot(v2.x, v2.y) ? normalized(v1) : normalized(v2);
  };
  return {eigvec(mu_big), eigvec(mu_small)};
}

class PantsRep {
 public:
  const Mat2& A() const noexcept { return a_; }
  const Mat2& B() const noexcept { return b_; }
  const std::array<double, 3>& cuff_lengths() const noexcept { return lengths_; }

  // Image of edge i traversed from the front vertex to the back vertex.
  const Mat2& edge_matrix(Label e) const noexcept { return t_[e - 1]; }
  const Mat2& edge_matrix_inverse(Label e) const noexcept { return tinv_[e - 1]; }

  // Group element of a walk starting at `from`.
  Mat2 walk(Side from, std::span<const Label> edges) const noexcept {
    Mat2 m;
    Side at = from;
    for (Label e : edges) {
      m = m * (at == Side::Front ? edge_matrix(e) : edge_matrix_inverse(e));
      at = flip(at);
    }
    return m;
  }

  Mat2 curve(std::span<const Label> word) const noexcept { return walk(Side::Front, word); }

  // Generators of the free group in a fixed order: A, B, A^-1, B^-1.
  std::array<Mat2, 4> generators() const noexcept { return {a_, b_, a_.inverse(), b_.inverse()}; }

 private:
  friend PantsRep pants_representation(double, double, double);
  PantsRep(Mat2 a, Mat2 b, std::array<double, 3> lengths) : a_(a), b_(b), lengths_(lengths) {
    Mat2 ab = a_ * b_;
    t_ = {Mat2{}, a_.inverse(), ab.inverse()};
    tinv_ = {Mat2{}, a_, ab};
  }

  Mat2 a_, b_;
  std::array<double, 3> lengths_;
  std::array<Mat2, 3> t_, tinv_;
};

// Pants group with cuff lengths (l1, l2, l3): tr A = 2cosh(l1/2),
// tr B = 2cosh(l2/2), tr AB = -2cosh(l3/2).
inline PantsRep pants_representation(double l1, double l2, double l3) {
  if (!(l1 > 0 && l2 > 0 && l3 > 0)) throw std::invalid_argument("cuff lengths must be positive");
  const double lam = std::exp(l1 / 2);
  const double y = 2 * std::cosh(l2 / 2);
  const double z = 2 * std::cosh(l3 / 2);
  Mat2 A{lam, 0, 0, 1 / lam};
  // B = [[p, 1], [p q - 1, q]] with p + q = y and lam p + q / lam = -z.
  double p = (-z - y / lam) / (lam - 1 / lam);
  double q = y - p;
  Mat2 B{p, 1, p * q - 1, q};
  PantsRep rep(A, B, {l1, l2, l3});

  for (const Mat2& m : {A, B})
    if (std::abs(m.det() - 1) > 1e-12) throw NumericalFailure("determinant drifted from 1");
  Mat2 ab = A * B;
  double got[3] = {translation_length(A), translation_length(B), translation_length(ab)};
  double want[3] = {l1, l2, l3};
  for (int i = 0; i < 3; ++i)
    if (std::abs(got[i] - want[i]) > 1e-9) throw NumericalFailure("cuff length identity not met");
  if (!(A.trace() > 2 && B.trace() > 2 && ab.trace() < -2))
    throw NumericalFailure("trace signs do not describe a pair of pants");
  return rep;
}

inline const PantsRep& default_rep() {
  static const PantsRep rep = pants_representation(2, 2, 2);
  return rep;
}

inline double word_length(std::span<const Label> word, const PantsRep& rep) {
  return translation_length(rep.curve(word));
}

inline double word_length(const CurveClass& c, const PantsRep& rep = default_rep()) {
  return word_length(c.word(), rep);
}

// ---------------------------------------------------------------------------
// Oracle

struct OracleResult {
  std::uint64_t count = 0;           // linked classes found within the radius
  std::uint64_t count_previous = 0;  // same, within radius - 2
  bool converged = false;
};

// Elements of the free group on A, B as reduced words; letter s is A, B, A^-1,
// B^-1 for s = 0..3.
using FreeWord = std::vector<std::int8_t>;

inline constexpr std::int8_t free_inverse(std::int8_t s) noexcept { return static_cast<std::int8_t>((s + 2) % 4); }

inline void free_push(FreeWord& w, std::int8_t s) {
  if (!w.empty() && w.back() == free_inverse(s)) w.pop_back();
  else w.push_back(s);
}

// The free-group word of an edge walk, matching PantsRep::walk.
inline FreeWord walk_word(Side from, std::span<const Label> edges) {
  FreeWord w;
  Side at = from;
  for (Label e : edges) {
    bool fwd = at == Side::Front;
    if (e == 2) free_push(w, fwd ? 2 : 0);
    if (e == 3) {
      if (fwd) {
        free_push(w, 3);
        free_push(w, 2);
      } else {
        free_push(w, 0);
        free_push(w, 1);
      }
    }
    at = flip(at);
  }
  return w;
}

namespace detail {

// Visits every reduced word g of length <= radius, built by prepending
// letters, with the images g*p of the given points (renormalized each step).
// visit(points, length, letters) receives the letters of g right to left.
template <std::size_t N, class Visit>
void for_each_group_element(const std::array<Mat2, 4>& gens, const std::array<Vec2, N>& start, int radius,
                            Visit&& visit) {
  FreeWord letters;
  visit(start, 0, letters);
  auto rec = [&](auto&& self, const std::array<Vec2, N>& pts, int depth) -> void {
    if (depth == radius) return;
    for (std::int8_t s = 0; s < 4; ++s) {
      if (!letters.empty() && s == free_inverse(letters.back())) continue;
      std::array<Vec2, N> next;
      for (std::size_t i = 0; i < N; ++i) next[i] = normalized(gens[s] * pts[i]);
      letters.push_back(s);
      visit(next, depth + 1, letters);
      self(self, next, depth + 1);
      letters.pop_back();
    }
  };
  rec(rec, start, 0);
}

struct Found {
  FreeWord key;  // identifies the lift exactly
  int depth;
};

inline OracleResult tally(std::vector<Found>& found, int radius) {
  std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) { return x.key < y.key; });
  OracleResult r;
  for (std::size_t i = 0; i < found.size();) {
    std::size_t j = i + 1;
    int depth = found[i].depth;
    while (j < found.size() && found[j].key == found[i].key) depth = std::min(depth, found[j++].depth);
    ++r.count;
    if (depth <= radius - 2) ++r.count_previous;
    i = j;
  }
  r.converged = r.count == r.count_previous;
  return r;
}

// g v g^-1 for g given right to left.
inline FreeWord conjugate(const FreeWord& g_rev, const FreeWord& v) {
  FreeWord w;
  for (auto it = g_rev.rbegin(); it != g_rev.rend(); ++it) free_push(w, *it);
  for (auto s : v) free_push(w, s);
  for (auto s : g_rev) free_push(w, free_inverse(s));
  return w;
}

}  // namespace detail

inline constexpr double kLinkGuard = 1e-10;

// Counts orbits of lifts of v whose axes cross the axis of u, by placing the
// axis of u on (0, inf) and counting distinct crossing geodesics whose
// crossing point falls in one fundamental segment of the translation by u.
// For u = v the result is i(u,u) = 2 self(u).
inline OracleResult oracle_intersection_raw(std::span<const Label> u, std::span<const Label> v,
                                            const PantsRep& rep, int radius) {
  Mat2 U = rep.curve(u);
  Mat2 V = rep.curve(v);
  auto [u_attr, u_rep] = fixed_points(U);
  // Conjugator sending attracting fixed point to inf = (1:0) and repelling to 0 = (0:1).
  Mat2 P{u_attr.x, u_rep.x, u_attr.y, u_rep.y};
  double dp = P.det();
  if (std::abs(dp) < 1e-14) throw NumericalFailure("degenerate axis");
  if (dp < 0) {
    P.b = -P.b;
    P.d = -P.d;
    dp = -dp;
  }
  double sc = 1 / std::sqrt(dp);
  P = {P.a * sc, P.b * sc, P.c * sc, P.d * sc};
  Mat2 Pinv = P.inverse();

  std::array<Mat2, 4> gens;
  auto raw = rep.generators();
  for (int i = 0; i < 4; ++i) gens[i] = Pinv * raw[i] * P;
  auto [v_attr, v_rep] = fixed_points(V);
  std::array<Vec2, 2> start{normalized(Pinv * v_attr), normalized(Pinv * v_rep)};

  const double ell = translation_length(U);
  const double t0 = 0.3819660112501051 * ell;
  std::vector<detail::Found> found;
  bool ambiguous = false;

  const FreeWord vword = walk_word(Side::Front, v);
  const FreeWord uword = walk_word(Side::Front, u);
  FreeWord uinv(uword.rbegin(), uword.rend());
  for (auto& s : uinv) s = free_inverse(s);
  detail::for_each_group_element(gens, start, radius, [&](const std::array<Vec2, 2>& pts, int depth,
                                                          const FreeWord& g) {
    // Both endpoints on the axis of u: the same geodesic.
    auto near_axis_end = [](const Vec2& p) { return std::min(std::abs(p.x), std::abs(p.y)) < 1e-6; };
    if (near_axis_end(pts[0]) && near_axis_end(pts[1])) {
      FreeWord key = detail::conjugate(g, vword);
      if (key == uword || key == uinv) return;  // the axis of u itself
    }
    if (std::abs(pts[0].y) < 1e-300 || std::abs(pts[1].y) < 1e-300) return;
    double x1 = pts[0].x / pts[0].y, x2 = pts[1].x / pts[1].y;
    double prod = x1 * x2;
    if (prod >= 0) return;  // same side of the axis: not crossing
    double t = 0.5 * std::log(-prod);
    if (t < t0 - 1e-9 || t >= t0 + ell + 1e-9) return;
    if (std::abs(t - t0) < 1e-9 || std::abs(t - t0 - ell) < 1e-9) {
      ambiguous = true;
      return;
    }
    double m1 = std::min(std::abs(pts[0].x), std::abs(pts[0].y));
    double m2 = std::min(std::abs(pts[1].x), std::abs(pts[1].y));
    if (m1 < kLinkGuard || m2 < kLinkGuard) {
      ambiguous = true;
      return;
    }
    found.push_back({detail::conjugate(g, vword), depth});
  });
  OracleResult r = detail::tally(found, radius);
  if (ambiguous) r.converged = false;
  return r;
}

// Converged count, or NotConverged carrying the partial count.
inline std::uint64_t oracle_intersection(const CurveClass& u, const CurveClass& v,
                                         const PantsRep& rep = default_rep(), int radius = -1) {
  if (radius < 0) radius = static_cast<int>(u.length() + v.length());
  OracleResult r = oracle_intersection_raw(u.word(), v.word(), rep, radius);
  if (!r.converged)
    throw NotConverged("oracle count changed between radius " + std::to_string(radius - 2) + " and " +
                           std::to_string(radius),
                       r.count);
  return r.count;
}

// Grows the radius by 2 from `radius` until two consecutive counts agree.
inline std::uint64_t oracle_intersection_adaptive(const CurveClass& u, const CurveClass& v, const PantsRep& rep,
                                                  int radius, int max_radius) {
  for (int R = radius;; R += 2) {
    OracleResult r = oracle_intersection_raw(u.word(), v.word(), rep, R);
    if (r.converged) return r.count;
    if (R + 2 > max_radius)
      throw NotConverged("oracle did not converge by radius " + std::to_string(R), r.count);
  }
}

namespace detail {

// One end of an arc lift: a point of the boundary interval behind the cuff
// lift it lands on, and the stabilizer of that lift as a free-group word.
struct ArcEnd {
  Vec2 point;
  FreeWord stabilizer;
};

inline FreeWord concat(const FreeWord& x, const FreeWord& y) {
  FreeWord w = x;
  for (auto s : y) free_push(w, s);
  return w;
}

// x y x^-1 with x given left to right.
inline FreeWord conjugate_by(const FreeWord& x, const FreeWord& y) {
  FreeWord w = concat(x, y);
  for (auto it = x.rbegin(); it != x.rend(); ++it) free_push(w, free_inverse(*it));
  return w;
}

inline FreeWord inverse(const FreeWord& x) {
  FreeWord w(x.rbegin(), x.rend());
  for (auto& s : w) s = free_inverse(s);
  return w;
}

inline double angle_mod(double t) {
  t = std::fmod(t, std::numbers::pi);
  return t < 0 ? t + std::numbers::pi : t;
}

// Interior point of the boundary interval cut off by a cuff lift with fixed
// points p, q: the half of the circle between them that avoids `away`.
inline Vec2 interval_point(Vec2 p, Vec2 q, Vec2 away) {
  double tp = projective_angle(p), tq = projective_angle(q), to = projective_angle(away);
  double d = angle_mod(tq - tp);
  double mid = angle_mod(to - tp) < d ? tq + (std::numbers::pi - d) / 2 : tp + d / 2;
  return {std::cos(mid), std::sin(mid)};
}

inline std::array<ArcEnd, 2> arc_ends(const ArcClass& a, const PantsRep& rep) {
  auto loop = [](HalfEdge h) {
    return std::array<Label, 2>{ribbon::edge_before_cuff(h.side, h.cuff), ribbon::edge_after_cuff(h.side, h.cuff)};
  };
  auto ls = loop(a.start()), le = loop(a.end());
  Mat2 h = rep.walk(a.start().side, a.interior());
  FreeWord hw = walk_word(a.start().side, a.interior());
  auto [s1, s2] = fixed_points(rep.walk(a.start().side, ls));
  auto [e1, e2] = fixed_points(rep.walk(a.end().side, le));
  e1 = normalized(h * e1);
  e2 = normalized(h * e2);
  return {ArcEnd{interval_point(s1, s2, e1), walk_word(a.start().side, ls)},
          ArcEnd{interval_point(e1, e2, s1), conjugate_by(hw, walk_word(a.end().side, le))}};
}

inline double angle_gap(double x, double y) {
  double d = std::abs(x - y);
  return std::min(d, std::numbers::pi - d);
}

}  // namespace detail

// Metric count of lifts of b linked with a fixed lift of a, for arcs with
// endpoints sliding on the geodesic cuffs. Each end is represented by a point
// of the boundary interval behind its cuff lift; lifts sharing a cuff lift are
// not linked.
inline OracleResult oracle_arc_intersection_raw(const ArcClass& a, const ArcClass& b, const PantsRep& rep,
                                                int radius) {
  auto ea = detail::arc_ends(a, rep);
  auto eb = detail::arc_ends(b, rep);
  double a1 = projective_angle(ea[0].point), a2 = projective_angle(ea[1].point);
  double lo = std::min(a1, a2), hi = std::max(a1, a2);
  std::vector<detail::Found> found;
  bool ambiguous = false;
  std::array<Vec2, 2> start{eb[0].point, eb[1].point};
  const FreeWord a_inverse[2] = {detail::inverse(ea[0].stabilizer), detail::inverse(ea[1].stabilizer)};
  detail::for_each_group_element(rep.generators(), start, radius, [&](const std::array<Vec2, 2>& pts, int depth,
                                                                      const FreeWord& g) {
    double bb[2] = {projective_angle(pts[0]), projective_angle(pts[1])};
    double aa[2] = {a1, a2};
    bool in1 = bb[0] > lo && bb[0] < hi, in2 = bb[1] > lo && bb[1] < hi;
    if (in1 == in2) return;
    for (int i = 0; i < 2; ++i) {
      FreeWord key = detail::conjugate(g, eb[i].stabilizer);
      for (int j = 0; j < 2; ++j) {
        if (key == ea[j].stabilizer || key == a_inverse[j]) return;  // shared cuff lift
        if (detail::angle_gap(aa[j], bb[i]) < kLinkGuard) ambiguous = true;
      }
    }
    found.push_back({g, depth});
  });
  OracleResult r = detail::tally(found, radius);
  if (ambiguous) r.converged = false;
  return r;
}

// ---------------------------------------------------------------------------
// Length spectrum

struct SpectrumEntry {
  CurveClass curve;
  double length;
};

// Classes with hyperbolic length <= max_length, sorted by (length, class).
// Word-length strata are scanned until two consecutive strata have every
// member longer than max_length, or max_word_length is reached.
inline std::vector<SpectrumEntry> length_spectrum(const PantsRep& rep, double max_length, int max_word_length = 40) {
  std::vector<SpectrumEntry> out;
  int above = 0;
  for (int L = 2; L <= max_word_length; L += 2) {
    double stratum_min = INFINITY;
    for (auto& c : curves_of_length(L)) {
      double len = word_length(c, rep);
      stratum_min = std::min(stratum_min, len);
      if (len <= max_length) out.push_back({std::move(c), len});
    }
    above = stratum_min > max_length ? above + 1 : 0;
    if (above == 2) break;
    if (L + 2 > max_word_length) throw CapExceeded(static_cast<std::uint64_t>(L + 2), max_word_length);
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    return x.length != y.length ? x.length < y.length : x.curve < y.curve;
  });
  return out;
}

// The m shortest classes, ties broken by class order.
inline std::vector<SpectrumEntry> shortest_classes(const PantsRep& rep, std::size_t m) {
  for (double L = 4;; L += 1) {
    auto spec = length_spectrum(rep, L);
    if (spec.size() >= m) {
      // Everything up to the m-th length is present, since the spectrum is complete below L.
      spec.erase(spec.begin() + static_cast<std::ptrdiff_t>(m), spec.end());
      return spec;
    }
  }
}

inline int buser_factor(int g, int n) { return g + (n + 1) / 2 - 1; }

struct CensusCheck {
  std::uint64_t count = 0;
  double bound = 0;
  bool ok = false;
};

inline constexpr double kDefaultCensusLengthCap = 8.0;

// Primitive classes of length <= L against (g + ceil(n/2) - 1) e^{L+6} with g=0, n=3.
inline CensusCheck geodesic_census_check(const PantsRep& rep, double L, double cap = kDefaultCensusLengthCap) {
  if (L > cap) throw CapExceeded(static_cast<std::uint64_t>(std::ceil(L)), static_cast<std::uint64_t>(cap));
  CensusCheck r;
  r.count = L < 0 ? 0 : length_spectrum(rep, L).size();
  r.bound = buser_factor(0, 3) * std::exp(L + 6);
  r.ok = static_cast<double>(r.count) <= r.bound;
  return r;
}

struct AverageCheck {
  double sum = 0;
  double bound = 0;
  bool ok = false;
};

// Lower bound on the total length of m distinct classes (with the factor m).
inline double average_length_bound(std::size_t m, double lambda, int g = 0, int n = 3) {
  double md = static_cast<double>(m);
  return lambda / (1 + lambda) * md * (std::log(md) - std::log((1 + lambda) * buser_factor(g, n)) - 6);
}

inline AverageCheck average_length_check(std::span<const SpectrumEntry> shortest, std::size_t m, double lambda) {
  if (m < 1 || m > shortest.size()) throw std::invalid_argument("average_length_check: m outside census");
  AverageCheck r;
  for (std::size_t i = 0; i < m; ++i) r.sum += shortest[i].length;
  r.bound = average_length_bound(m, lambda);
  r.ok = r.bound <= 0 ? true : r.sum > r.bound;
  return r;
}

inline AverageCheck average_length_check(const PantsRep& rep, std::size_t m, double lambda) {
  auto shortest = shortest_classes(rep, m);
  return average_length_check(shortest, m, lambda);
}

}  // namespace crosslab
