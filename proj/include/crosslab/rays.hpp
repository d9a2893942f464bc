#pragma once

// Ends of the universal cover tree and their circular order.
//
// The universal cover of the ribbon graph is a planar trivalent tree. An end
// is described by a non-backtracking ray from a base vertex; ends are ordered
// counterclockwise around the boundary circle. At the base vertex the order is
// cut just before the subtree entered through `seed`; at every later vertex the
// branch that comes first counterclockwise after the incoming edge comes first.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "crosslab/pants.hpp"

namespace crosslab {

enum class RayOrder : std::uint8_t { Before, After, Equal };

// Eventually periodic ray: prefix, then `period` repeated forever.
struct BoundaryRay {
  Side base = Side::Front;
  Word prefix;
  Word period;

  Label at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return period[(i - prefix.size()) % period.size()];
  }
  std::size_t prefix_length() const noexcept { return prefix.size(); }
  std::size_t period_length() const noexcept { return period.size(); }
};

class DivergenceBoundExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Letters after which two eventually periodic rays that still agree are equal.
constexpr std::size_t divergence_bound(std::size_t prefix_a, std::size_t period_a, std::size_t prefix_b,
                                       std::size_t period_b) noexcept {
  return std::max(prefix_a, prefix_b) + 2 * (period_a + period_b) + 4;
}

namespace detail {

// Shared comparison over anything exposing at(i). Returns Equal when the rays
// agree for `bound` letters, which for eventually periodic rays within the
// bound above means they agree forever.
template <class RayA, class RayB>
RayOrder compare_rays(Side base, Label seed, const RayA& a, const RayB& b, std::size_t bound) {
  Label la = a.at(0), lb = b.at(0);
  if (la != lb)
    return ribbon::ccw_rank(base, seed, la) < ribbon::ccw_rank(base, seed, lb) ? RayOrder::Before
                                                                               : RayOrder::After;
  Side at = base;
  Label incoming = la;
  for (std::size_t i = 1; i < bound; ++i) {
    at = flip(at);
    la = a.at(i);
    lb = b.at(i);
    if (la != lb)
      return ribbon::ccw_rank(at, incoming, la) < ribbon::ccw_rank(at, incoming, lb) ? RayOrder::Before
                                                                                   : RayOrder::After;
    incoming = la;
  }
  return RayOrder::Equal;
}

}  // namespace detail

// Compares two rays from the same base vertex, cutting the circle at `seed`.
inline RayOrder ray_compare(const BoundaryRay& a, const BoundaryRay& b, Label seed) {
  if (a.base != b.base) throw std::invalid_argument("ray_compare: rays from different base vertices");
  if (a.period.empty() || b.period.empty())
    throw DivergenceBoundExceeded("ray_compare: ray without a periodic tail");
  std::size_t bound =
      divergence_bound(a.prefix_length(), a.period_length(), b.prefix_length(), b.period_length());
  return detail::compare_rays(a.base, seed, a, b, bound);
}

// Default seed: the first letter of `a`.
inline RayOrder ray_compare(const BoundaryRay& a, const BoundaryRay& b) { return ray_compare(a, b, a.at(0)); }

// Two geodesics given by their end rays {a1,a2} and {b1,b2} from one base
// vertex are linked iff exactly one of b1, b2 lies strictly between a1 and a2.
// A shared end means no forced crossing.
template <class Cmp>
bool linked_by(Cmp&& cmp) {
  // cmp(i, j) compares ray i and ray j, indices 0,1 = a-pair and 2,3 = b-pair.
  RayOrder a12 = cmp(0, 1);
  int lo = a12 == RayOrder::Before ? 0 : 1;
  int hi = 1 - lo;
  int inside = 0;
  for (int b = 2; b < 4; ++b) {
    RayOrder vs_lo = cmp(lo, b), vs_hi = cmp(b, hi);
    if (vs_lo == RayOrder::Equal || vs_hi == RayOrder::Equal) return false;
    if (vs_lo == RayOrder::Before && vs_hi == RayOrder::Before) ++inside;
  }
  return inside == 1;
}

inline bool rays_linked(const BoundaryRay& a1, const BoundaryRay& a2, const BoundaryRay& b1,
                        const BoundaryRay& b2, Label seed) {
  const BoundaryRay* r[4] = {&a1, &a2, &b1, &b2};
  return linked_by([&](int i, int j) { return ray_compare(*r[i], *r[j], seed); });
}

}  // namespace crosslab
