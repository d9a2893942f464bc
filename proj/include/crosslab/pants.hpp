#pragma once

// The square-tiled pair of pants as a two-vertex ribbon graph.
//
// Two singular points (Front, Back) are joined by three unit interior edges
// labelled 1, 2, 3. Each vertex also carries three half-edges of length 1/2,
// one per cuff: f1, f2, f3 at the front and b1, b2, b3 at the back. The cyclic
// (counterclockwise) order of the six edge-ends at each vertex is
//
//   front: e1 f1 e2 f2 e3 f3
//   back:  e1 b3 e3 b2 e2 b1
//
// so cuff 1 is the face bounded by edges {1,2}, cuff 2 by {2,3} and cuff 3 by
// {1,3}. Closed curves are cyclic non-backtracking edge words read from the
// front vertex; arcs are half-edge, edge word, half-edge triples.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosslab/errors.hpp"

namespace crosslab {

using Label = std::uint8_t;
using Word = std::vector<Label>;

enum class Side : std::uint8_t { Front = 0, Back = 1 };

constexpr Side flip(Side s) noexcept { return s == Side::Front ? Side::Back : Side::Front; }

// Vertex reached after `steps` edges starting from `s`.
constexpr Side advance(Side s, std::size_t steps) noexcept { return (steps % 2 == 0) ? s : flip(s); }

constexpr bool valid_label(int l) noexcept { return l >= 1 && l <= 3; }

struct HalfEdge {
  Side side = Side::Front;
  std::uint8_t cuff = 1;  // 1..3

  friend constexpr auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

inline std::string to_string(HalfEdge h) {
  return std::string(h.side == Side::Front ? "f" : "b") + char('0' + h.cuff);
}

inline std::optional<HalfEdge> parse_half_edge(std::string_view s) {
  if (s.size() != 2) return std::nullopt;
  Side side;
  if (s[0] == 'f' || s[0] == 'F') {
    side = Side::Front;
  } else if (s[0] == 'b' || s[0] == 'B') {
    side = Side::Back;
  } else {
    return std::nullopt;
  }
  int c = s[1] - '0';
  if (c < 1 || c > 3) return std::nullopt;
  return HalfEdge{side, static_cast<std::uint8_t>(c)};
}

enum class Turn : std::uint8_t { Left, Right };

// Fixed cyclic orders of edge-ends. Items 1..3 are interior edges, 4..6 are the
// half-edges of cuffs 1..3 at that vertex.
namespace ribbon {

inline constexpr std::array<std::array<std::uint8_t, 6>, 2> kCycle{{
    {1, 4, 2, 5, 3, 6},  // front: e1 f1 e2 f2 e3 f3
    {1, 6, 3, 5, 2, 4},  // back:  e1 b3 e3 b2 e2 b1
}};

constexpr int position(Side s, std::uint8_t item) noexcept {
  const auto& cyc = kCycle[static_cast<int>(s)];
  for (int i = 0; i < 6; ++i)
    if (cyc[i] == item) return i;
  return -1;
}

constexpr std::uint8_t item_at(Side s, int pos) noexcept {
  return kCycle[static_cast<int>(s)][((pos % 6) + 6) % 6];
}

// Next interior edge counterclockwise after `e`: (1,2,3) at the front, (1,3,2) at the back.
constexpr Label next_ccw(Side s, Label e) noexcept {
  return item_at(s, position(s, e) + 2);
}

// Counterclockwise steps (among interior edges) from `from` to `to`: 0, 1 or 2.
constexpr int ccw_rank(Side s, Label from, Label to) noexcept {
  if (from == to) return 0;
  return next_ccw(s, from) == to ? 1 : 2;
}

// Interior edge diametrically opposite the half-edge of `cuff`.
constexpr Label edge_opposite_cuff(Side s, std::uint8_t cuff) noexcept {
  return item_at(s, position(s, static_cast<std::uint8_t>(cuff + 3)) + 3);
}

// Cuff whose half-edge is diametrically opposite interior edge `e`.
constexpr std::uint8_t cuff_opposite_edge(Side s, Label e) noexcept {
  return static_cast<std::uint8_t>(item_at(s, position(s, e) + 3) - 3);
}

// Interior edges immediately before / after the cuff's half-edge in ccw order.
constexpr Label edge_before_cuff(Side s, std::uint8_t cuff) noexcept {
  return item_at(s, position(s, static_cast<std::uint8_t>(cuff + 3)) - 1);
}
constexpr Label edge_after_cuff(Side s, std::uint8_t cuff) noexcept {
  return item_at(s, position(s, static_cast<std::uint8_t>(cuff + 3)) + 1);
}

// Edge taken when arriving through `incoming`: Right is the next edge ccw.
constexpr Label turn_edge(Side s, Label incoming, Turn t) noexcept {
  Label right = next_ccw(s, incoming);
  return t == Turn::Right ? right : next_ccw(s, right);
}

}  // namespace ribbon

// The two interior edges bounding cuff c.
constexpr std::pair<Label, Label> cuff_edges(std::uint8_t cuff) noexcept {
  switch (cuff) {
    case 1: return {1, 2};
    case 2: return {2, 3};
    default: return {1, 3};
  }
}

namespace detail {

inline void check_labels(std::span<const Label> w) {
  if (w.empty()) throw ValidationError(ValidationKind::EmptyWord, "word is empty");
  for (Label l : w)
    if (!valid_label(l))
      throw ValidationError(ValidationKind::InvalidLabel,
                            "label " + std::to_string(int(l)) + " is not in {1,2,3}");
}

inline void check_cyclic_nonbacktracking(std::span<const Label> w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] == w[(i + 1) % n])
      throw ValidationError(ValidationKind::Backtracking,
                            "cyclically adjacent labels repeat at position " + std::to_string(i));
}

inline Word rotate_copy(std::span<const Label> w, std::size_t k) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + k) % w.size()];
  return out;
}

inline bool rotation_less(std::span<const Label> w, std::size_t a, std::size_t b) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    Label x = w[(a + i) % n], y = w[(b + i) % n];
    if (x != y) return x < y;
  }
  return false;
}

// Lexicographically least rotation among offsets 0, step, 2*step, ...
inline Word min_rotation(std::span<const Label> w, std::size_t step) {
  std::size_t best = 0;
  for (std::size_t k = step; k < w.size(); k += step)
    if (rotation_less(w, k, best)) best = k;
  return rotate_copy(w, best);
}

}  // namespace detail

// Least word over all rotations of `word` and of its reversal.
inline Word canonical_cyclic(std::span<const Label> word) {
  detail::check_labels(word);
  detail::check_cyclic_nonbacktracking(word);
  Word fwd = detail::min_rotation(word, 1);
  Word rev(word.rbegin(), word.rend());
  Word bwd = detail::min_rotation(rev, 1);
  return std::min(fwd, bwd);
}

// Least word over even rotations and the reversal. Even rotations keep the
// reading vertex at the front; reversal of an even word also starts there.
// Odd rotations would give the front/back mirror class, which differs in general.
inline Word canonical_curve_word(std::span<const Label> word) {
  Word fwd = detail::min_rotation(word, 2);
  Word rev(word.rbegin(), word.rend());
  Word bwd = detail::min_rotation(rev, 2);
  return std::min(fwd, bwd);
}

// False iff the closed walk is a proper power of a shorter closed walk, i.e.
// the word has an even period d < |w| dividing |w|.
inline bool is_primitive(std::span<const Label> word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0 || d % 2 != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + d < n && periodic; ++i) periodic = word[i] == word[i + d];
    if (periodic) return false;
  }
  return true;
}

// A free homotopy class of primitive closed curves, unoriented.
class CurveClass {
 public:
  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  // Census order: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const CurveClass& a, const CurveClass& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  explicit CurveClass(Word w) : word_(std::move(w)) {}
  friend CurveClass make_curve(std::span<const Label> word);
  friend CurveClass curve_from_canonical(Word w);

  Word word_;
};

inline CurveClass make_curve(std::span<const Label> word) {
  detail::check_labels(word);
  if (word.size() < 2)
    throw ValidationError(ValidationKind::TooShort, "closed words need at least two edges");
  if (word.size() % 2 != 0)
    throw ValidationError(ValidationKind::OddLength,
                          "closed walk of odd length " + std::to_string(word.size()));
  detail::check_cyclic_nonbacktracking(word);
  if (!is_primitive(word)) throw ValidationError(ValidationKind::NonPrimitive, "word is a proper power");
  return CurveClass(canonical_curve_word(word));
}

inline CurveClass make_curve(std::initializer_list<Label> word) {
  Word w(word);
  return make_curve(std::span<const Label>(w));
}

// Trusted constructor for words already known to be canonical and primitive.
inline CurveClass curve_from_canonical(Word w) { return CurveClass(std::move(w)); }

inline std::string word_to_string(std::span<const Label> w, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += char('0' + w[i]);
  }
  return s;
}

// A homotopy class of arcs with endpoints sliding on cuffs, unoriented.
// Stored as its canonical geodesic orientation.
class ArcClass {
 public:
  HalfEdge start() const noexcept { return start_; }
  const Word& interior() const noexcept { return interior_; }
  HalfEdge end() const noexcept { return end_; }
  // Two half segments plus |interior| unit segments.
  std::size_t length() const noexcept { return interior_.size() + 1; }

  friend bool operator==(const ArcClass&, const ArcClass&) = default;
  friend std::strong_ordering operator<=>(const ArcClass& a, const ArcClass& b) {
    if (auto c = a.interior_.size() <=> b.interior_.size(); c != 0) return c;
    if (auto c = a.start_ <=> b.start_; c != 0) return c;
    if (auto c = a.interior_ <=> b.interior_; c != 0) return c;
    return a.end_ <=> b.end_;
  }

 private:
  ArcClass(HalfEdge s, Word w, HalfEdge e) : start_(s), interior_(std::move(w)), end_(e) {}
  friend ArcClass make_arc(HalfEdge, std::span<const Label>, HalfEdge);

  HalfEdge start_;
  Word interior_;
  HalfEdge end_;
};

namespace detail {

struct OrientedArc {
  HalfEdge start;
  Word interior;
  HalfEdge end;

  friend auto operator<=>(const OrientedArc&, const OrientedArc&) = default;
};

inline OrientedArc reverse(const OrientedArc& a) {
  return {a.end, Word(a.interior.rbegin(), a.interior.rend()), a.start};
}

}  // namespace detail

// Validates that the triple is a geodesic arc and returns its canonical form.
// Length-1 arcs are normalized to the front hexagon.
inline ArcClass make_arc(HalfEdge start, std::span<const Label> interior, HalfEdge end) {
  auto bad_half = [](HalfEdge h) { return h.cuff < 1 || h.cuff > 3; };
  if (bad_half(start) || bad_half(end))
    throw ValidationError(ValidationKind::InvalidHalfEdge, "cuff index outside 1..3");
  for (Label l : interior)
    if (!valid_label(l))
      throw ValidationError(ValidationKind::InvalidLabel, "interior label outside {1,2,3}");

  if (interior.empty()) {
    if (start.side != end.side)
      throw ValidationError(ValidationKind::NonGeodesicArc,
                            "length-1 arc must start and end at the same vertex");
    if (start.cuff == end.cuff)
      throw ValidationError(ValidationKind::NonGeodesicArc, "length-1 arc joins a cuff to itself");
    std::uint8_t lo = std::min(start.cuff, end.cuff), hi = std::max(start.cuff, end.cuff);
    return ArcClass({Side::Front, lo}, {}, {Side::Front, hi});
  }

  if (interior.front() != ribbon::edge_opposite_cuff(start.side, start.cuff))
    throw ValidationError(ValidationKind::NonGeodesicArc,
                          "first interior edge must be opposite the starting half-edge");
  for (std::size_t i = 0; i + 1 < interior.size(); ++i)
    if (interior[i] == interior[i + 1])
      throw ValidationError(ValidationKind::Backtracking,
                            "interior backtracks at position " + std::to_string(i));
  Side end_side = advance(start.side, interior.size());
  if (end.side != end_side)
    throw ValidationError(ValidationKind::NonGeodesicArc, "end half-edge on the wrong vertex");
  if (end.cuff != ribbon::cuff_opposite_edge(end_side, interior.back()))
    throw ValidationError(ValidationKind::NonGeodesicArc,
                          "end half-edge must be opposite the last interior edge");

  detail::OrientedArc fwd{start, Word(interior.begin(), interior.end()), end};
  detail::OrientedArc bwd = detail::reverse(fwd);
  const auto& best = std::min(fwd, bwd);
  return ArcClass(best.start, best.interior, best.end);
}

inline ArcClass make_arc(HalfEdge start, std::initializer_list<Label> interior, HalfEdge end) {
  Word w(interior);
  return make_arc(start, std::span<const Label>(w), end);
}

inline std::string to_string(const ArcClass& a) {
  return to_string(a.start()) + "[" + word_to_string(a.interior()) + "]" + to_string(a.end());
}

inline std::string to_string(const CurveClass& c) { return "(" + word_to_string(c.word()) + ")"; }

// Resolves a left/right turn sequence from `start` into a geodesic arc of
// length |turns| + 2: forced straight first edge, one edge per turn, and the
// unique closing half-edge.
inline ArcClass turns_to_edges(HalfEdge start, std::span<const Turn> turns) {
  Word w;
  w.reserve(turns.size() + 1);
  Side at = start.side;
  Label e = ribbon::edge_opposite_cuff(at, start.cuff);
  w.push_back(e);
  at = flip(at);
  for (Turn t : turns) {
    e = ribbon::turn_edge(at, e, t);
    w.push_back(e);
    at = flip(at);
  }
  HalfEdge end{at, ribbon::cuff_opposite_edge(at, e)};
  return make_arc(start, w, end);
}

inline ArcClass turns_to_edges(HalfEdge start, std::initializer_list<Turn> turns) {
  std::vector<Turn> t(turns);
  return turns_to_edges(start, std::span<const Turn>(t));
}

// Inverse of turns_to_edges for the stored orientation of an arc of length >= 2.
inline std::pair<HalfEdge, std::vector<Turn>> edges_to_turns(const ArcClass& a) {
  std::vector<Turn> turns;
  const Word& w = a.interior();
  Side at = advance(a.start().side, 1);
  for (std::size_t i = 1; i < w.size(); ++i) {
    turns.push_back(ribbon::next_ccw(at, w[i - 1]) == w[i] ? Turn::Right : Turn::Left);
    at = flip(at);
  }
  return {a.start(), turns};
}

// The same class read in the opposite direction (not canonical for length >= 2).
inline detail::OrientedArc oriented(const ArcClass& a) { return {a.start(), a.interior(), a.end()}; }

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::uint64_t kDefaultCensusCap = std::uint64_t{1} << 24;

// CROSSLAB_CAP overrides the default cap when set to a positive integer.
inline std::uint64_t census_cap() {
  if (const char* env = std::getenv("CROSSLAB_CAP")) {
    char* endp = nullptr;
    unsigned long long v = std::strtoull(env, &endp, 10);
    if (endp != env && *endp == '\0' && v > 0) return v;
  }
  return kDefaultCensusCap;
}

inline std::uint64_t arc_census_size(int max_length) {
  if (max_length < 1) return 0;
  if (max_length > 62) return ~std::uint64_t{0};
  return 3 * (std::uint64_t{1} << (max_length - 1));
}

// All arcs of length exactly L in canonical order.
inline std::vector<ArcClass> arcs_of_length(int length) {
  std::vector<ArcClass> out;
  if (length < 1) return out;
  if (length == 1) {
    for (std::uint8_t i = 1; i <= 3; ++i)
      for (std::uint8_t j = i + 1; j <= 3; ++j)
        out.push_back(make_arc({Side::Front, i}, std::span<const Label>{}, {Side::Front, j}));
    return out;
  }
  const std::size_t nturns = static_cast<std::size_t>(length - 2);
  std::vector<Turn> turns(nturns);
  for (int side = 0; side < 2; ++side) {
    for (std::uint8_t c = 1; c <= 3; ++c) {
      HalfEdge start{static_cast<Side>(side), c};
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nturns); ++mask) {
        for (std::size_t i = 0; i < nturns; ++i)
          turns[i] = ((mask >> (nturns - 1 - i)) & 1) ? Turn::Right : Turn::Left;
        ArcClass a = turns_to_edges(start, turns);
        // Each unoriented class arises from both orientations; keep the canonical one.
        if (a.start() == start && edges_to_turns(a).second == turns) out.push_back(std::move(a));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ArcClass> enumerate_arcs(int max_length, std::uint64_t cap = census_cap()) {
  if (max_length < 1) throw std::invalid_argument("enumerate_arcs: max length must be >= 1");
  std::uint64_t need = arc_census_size(max_length);
  if (need > cap) throw CapExceeded(need, cap);
  std::vector<ArcClass> out;
  out.reserve(need);
  for (int L = 1; L <= max_length; ++L) {
    auto stratum = arcs_of_length(L);
    out.insert(out.end(), std::make_move_iterator(stratum.begin()),
               std::make_move_iterator(stratum.end()));
  }
  return out;
}

// All primitive curve classes of length exactly L (even) in canonical order.
inline std::vector<CurveClass> curves_of_length(int length) {
  std::vector<CurveClass> out;
  if (length < 2 || length % 2 != 0) return out;
  const std::size_t n = static_cast<std::size_t>(length);
  Word w(n);
  // Depth-first over non-backtracking words; closing condition checked at the end.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (w[n - 1] == w[0]) return;
      if (!is_primitive(w)) return;
      if (canonical_curve_word(w) != w) return;
      out.push_back(curve_from_canonical(w));
      return;
    }
    for (Label l = 1; l <= 3; ++l) {
      if (i > 0 && w[i - 1] == l) continue;
      // Canonical words start with the least label.
      if (i > 0 && l < w[0]) continue;
      w[i] = l;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Upper estimate of the number of classes of length <= L, used for the cap guard.
inline std::uint64_t curve_census_estimate(int max_length) {
  std::uint64_t total = 0;
  for (int L = 2; L <= max_length; L += 2) {
    if (L > 62) return ~std::uint64_t{0};
    total += ((std::uint64_t{1} << L) + 2) / static_cast<std::uint64_t>(L);
  }
  return total;
}

inline std::vector<CurveClass> enumerate_curves(int max_length, std::uint64_t cap = census_cap()) {
  if (max_length < 2) throw std::invalid_argument("enumerate_curves: max length must be >= 2");
  std::uint64_t need = curve_census_estimate(max_length);
  if (need > cap) throw CapExceeded(need, cap);
  std::vector<CurveClass> out;
  for (int L = 2; L <= max_length; L += 2) {
    auto stratum = curves_of_length(L);
    out.insert(out.end(), std::make_move_iterator(stratum.begin()),
               std::make_move_iterator(stratum.end()));
  }
  return out;
}

}  // namespace crosslab
