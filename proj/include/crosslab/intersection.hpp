#pragma once

// Exact geometric intersection numbers on the pants.
//
// Every class lifts to bi-infinite non-backtracking paths ("strands") in the
// universal cover tree. A closed curve lifts to the axis of its word. An arc
// lifts to its interior path extended at each end by the ray that runs along
// the cuff it ends on, keeping the cuff face on the left; that ray's end stands
// for the whole boundary interval, so arcs ending on the same cuff lift share
// an end and are never forced to cross there.
//
// Two lifts cross in minimal position iff their ends alternate on the circle.
// Linked lifts share a finite path of edges. Each crossing is counted once, at
// the first shared vertex along the first lift, with the second lift oriented
// to run the same way through the shared path.

#include <algorithm>
#include <array>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "crosslab/family.hpp"
#include "crosslab/pants.hpp"
#include "crosslab/parallel.hpp"
#include "crosslab/rays.hpp"

namespace crosslab {

class Strand {
 public:
  static Strand curve(const Word& w) {
    Strand s;
    s.side0_ = Side::Front;
    s.core_ = w;
    s.periodic_ = true;
    return s;
  }
  static Strand curve(const CurveClass& c) { return curve(c.word()); }

  static Strand arc(const detail::OrientedArc& a) {
    Strand s;
    s.side0_ = a.start.side;
    s.core_ = a.interior;
    s.periodic_ = false;
    // Start ray leaves vertex 0 along the start cuff; end ray leaves vertex m along the end cuff.
    s.start_ray_ = {ribbon::edge_before_cuff(a.start.side, a.start.cuff),
                    ribbon::edge_after_cuff(a.start.side, a.start.cuff)};
    s.end_ray_ = {ribbon::edge_before_cuff(a.end.side, a.end.cuff),
                  ribbon::edge_after_cuff(a.end.side, a.end.cuff)};
    return s;
  }
  static Strand arc(const ArcClass& a) { return arc(oriented(a)); }

  Strand reversed() const {
    if (periodic_) return curve(Word(core_.rbegin(), core_.rend()));
    Strand s;
    s.side0_ = advance(side0_, core_.size());
    s.core_ = Word(core_.rbegin(), core_.rend());
    s.periodic_ = false;
    s.start_ray_ = end_ray_;
    s.end_ray_ = start_ray_;
    return s;
  }

  // Edge traversed from vertex k to vertex k+1.
  Label edge(long k) const noexcept {
    const long m = static_cast<long>(core_.size());
    if (periodic_) return core_[static_cast<std::size_t>(((k % m) + m) % m)];
    if (k >= 0 && k < m) return core_[static_cast<std::size_t>(k)];
    if (k >= m) return end_ray_[static_cast<std::size_t>((k - m) % 2)];
    return start_ray_[static_cast<std::size_t>((-1 - k) % 2)];
  }

  Side side(long k) const noexcept { return (k % 2 == 0) ? side0_ : flip(side0_); }
  bool periodic() const noexcept { return periodic_; }
  long core_length() const noexcept { return static_cast<long>(core_.size()); }

  // Letters before the periodic tail of the ray leaving vertex k forward / backward.
  std::size_t forward_prefix(long k) const noexcept {
    return periodic_ ? 0 : static_cast<std::size_t>(std::max(0L, core_length() - k));
  }
  std::size_t backward_prefix(long k) const noexcept {
    return periodic_ ? 0 : static_cast<std::size_t>(std::max(0L, k));
  }
  std::size_t period() const noexcept { return periodic_ ? core_.size() : 2; }

  // The ray from vertex k, as a standalone value.
  BoundaryRay ray(long k, bool forward) const {
    BoundaryRay r;
    r.base = side(k);
    std::size_t pre = forward ? forward_prefix(k) : backward_prefix(k);
    for (std::size_t i = 0; i < pre; ++i) r.prefix.push_back(at(k, forward, i));
    for (std::size_t i = 0; i < period(); ++i) r.period.push_back(at(k, forward, pre + i));
    return r;
  }

  Label at(long k, bool forward, std::size_t i) const noexcept {
    long li = static_cast<long>(i);
    return forward ? edge(k + li) : edge(k - 1 - li);
  }

 private:
  Side side0_ = Side::Front;
  Word core_;
  bool periodic_ = true;
  std::array<Label, 2> start_ray_{};
  std::array<Label, 2> end_ray_{};
};

namespace detail {

struct StrandRay {
  const Strand* s;
  long k;
  bool forward;
  Label at(std::size_t i) const noexcept { return s->at(k, forward, i); }
  std::size_t prefix() const noexcept { return forward ? s->forward_prefix(k) : s->backward_prefix(k); }
};

struct Window {
  long lo;
  long hi;  // inclusive
};

// Counts lifts of b (either orientation) linked with the fixed lift of a, with
// the first shared vertex at a-position in `ka` and b-position in `jb`.
inline std::uint64_t count_linked(const Strand& a, Window ka, const Strand& b_fwd, const Strand& b_rev,
                                  Window jb, bool same_end_is_error) {
  std::uint64_t count = 0;
  const Strand* orientations[2] = {&b_fwd, &b_rev};
  for (long k = ka.lo; k <= ka.hi; ++k) {
    const Side at = a.side(k);
    const Label out = a.edge(k);
    const Label in = a.edge(k - 1);
    for (const Strand* b : orientations) {
      for (long j = jb.lo; j <= jb.hi; ++j) {
        if (b->side(j) != at || b->edge(j) != out || b->edge(j - 1) == in) continue;
        const StrandRay rays[4] = {{&a, k, false}, {&a, k, true}, {b, j, false}, {b, j, true}};
        auto cmp = [&](int x, int y) {
          const StrandRay& rx = rays[x];
          const StrandRay& ry = rays[y];
          std::size_t bound = divergence_bound(rx.prefix(), rx.s->period(), ry.prefix(), ry.s->period());
          RayOrder o = compare_rays(at, out, rx, ry, bound);
          if (o == RayOrder::Equal && same_end_is_error)
            throw DivergenceBoundExceeded("lifts of primitive curves failed to diverge");
          return o;
        };
        if (linked_by(cmp)) ++count;
      }
    }
  }
  return count;
}

inline Window arc_window(const Strand& self, const Strand& other) {
  // Linked overlaps touch both cores; an overlap can run into a cuff ray for at
  // most the other strand's core plus one edge per end.
  return {-(other.core_length() + 4), self.core_length() + 1};
}

}  // namespace detail

// Precomputed lifts of one class in both orientations.
struct Lift {
  Strand fwd;
  Strand rev;

  explicit Lift(const CurveClass& c) : fwd(Strand::curve(c)), rev(fwd.reversed()) {}
  explicit Lift(const ArcClass& a) : fwd(Strand::arc(a)), rev(fwd.reversed()) {}
};

inline std::uint64_t intersection_number(const Lift& u, const Lift& v) {
  return detail::count_linked(u.fwd, {0, u.fwd.core_length() - 1}, v.fwd, v.rev,
                              {0, v.fwd.core_length() - 1}, true);
}

inline std::uint64_t intersection_number(const CurveClass& u, const CurveClass& v) {
  return intersection_number(Lift(u), Lift(v));
}

inline std::uint64_t self_intersection(const CurveClass& u) {
  Lift l(u);
  return intersection_number(l, l) / 2;
}

// Extra window slack is for tests checking that counts are window-independent.
inline std::uint64_t arc_intersection(const Lift& a, const Lift& b, long slack = 0) {
  detail::Window ka = detail::arc_window(a.fwd, b.fwd);
  detail::Window jb = detail::arc_window(b.fwd, a.fwd);
  ka.lo -= slack;
  ka.hi += slack;
  jb.lo -= slack;
  jb.hi += slack;
  return detail::count_linked(a.fwd, ka, b.fwd, b.rev, jb, false);
}

inline std::uint64_t arc_intersection(const ArcClass& a, const ArcClass& b) {
  return arc_intersection(Lift(a), Lift(b));
}

inline std::uint64_t arc_self_intersection(const ArcClass& a) {
  Lift l(a);
  return arc_intersection(l, l) / 2;
}

// ---------------------------------------------------------------------------
// Families

struct BlockStats {
  int id = 0;
  std::uint64_t crossing = 0;
  std::uint64_t max_pair = 0;  // max over i(x,y) including x = y
};

struct CrossingStats {
  std::uint64_t crossing = 0;
  std::uint64_t max_pair = 0;
  std::vector<BlockStats> blocks;
};

namespace detail {

template <class T>
BlockStats block_stats(int id, const std::vector<T>& members, unsigned jobs) {
  std::vector<Lift> lifts;
  lifts.reserve(members.size());
  for (const auto& m : members) lifts.emplace_back(m);
  constexpr bool curves = std::is_same_v<T, CurveClass>;
  auto inter = [&](std::size_t i, std::size_t j) {
    if constexpr (curves) return intersection_number(lifts[i], lifts[j]);
    else return arc_intersection(lifts[i], lifts[j]);
  };
  std::vector<std::uint64_t> row_sum(members.size()), row_max(members.size());
  parallel_for(members.size(), jobs, [&](std::size_t i) {
    std::uint64_t self2 = inter(i, i);
    std::uint64_t sum = self2 / 2, mx = self2;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      std::uint64_t x = inter(i, j);
      sum += x;
      mx = std::max(mx, x);
    }
    row_sum[i] = sum;
    row_max[i] = mx;
  });
  BlockStats s;
  s.id = id;
  for (std::size_t i = 0; i < members.size(); ++i) {
    s.crossing += row_sum[i];
    s.max_pair = std::max(s.max_pair, row_max[i]);
  }
  return s;
}

}  // namespace detail

// Crossing with self-intersections counted once per self-crossing; classes in
// different blocks never meet.
inline CrossingStats crossing_stats(const Family& f, unsigned jobs = 1) {
  CrossingStats out;
  for (const auto& b : f.blocks) {
    BlockStats s = f.kind == FamilyKind::Curves ? detail::block_stats(b.id, b.curves, jobs)
                                                : detail::block_stats(b.id, b.arcs, jobs);
    out.crossing += s.crossing;
    out.max_pair = std::max(out.max_pair, s.max_pair);
    out.blocks.push_back(s);
  }
  return out;
}

inline std::uint64_t family_crossing(const Family& f, unsigned jobs = 1) {
  return crossing_stats(f, jobs).crossing;
}

// Full symmetric matrix of pairwise intersections; the diagonal holds i(x,x) = 2 self(x).
template <class T>
std::vector<std::vector<std::uint64_t>> intersection_matrix(const std::vector<T>& members, unsigned jobs = 1) {
  std::vector<Lift> lifts;
  for (const auto& m : members) lifts.emplace_back(m);
  const std::size_t n = members.size();
  std::vector<std::vector<std::uint64_t>> mat(n, std::vector<std::uint64_t>(n));
  parallel_for(n, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if constexpr (std::is_same_v<T, CurveClass>) mat[i][j] = intersection_number(lifts[i], lifts[j]);
      else mat[i][j] = arc_intersection(lifts[i], lifts[j]);
    }
  });
  return mat;
}

}  // namespace crosslab
