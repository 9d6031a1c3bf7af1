#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace unclab {

// Canonical finite union of half-open intervals [a, b) on the real line.
// Parts are sorted, pairwise disjoint, and touching parts are merged, so the
// representation of a set is unique. Immutable after construction.
class IntervalUnion {
 public:
  using Part = std::pair<double, double>;

  IntervalUnion() = default;

  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  double measure() const;

  bool operator==(const IntervalUnion& other) const {
    return parts_ == other.parts_;
  }

  friend IntervalUnion normalize_intervals(const std::vector<Part>& raw);
  friend IntervalUnion unite(const IntervalUnion& u, const IntervalUnion& v);
  friend IntervalUnion intersect(const IntervalUnion& u,
                                 const IntervalUnion& v);
  friend IntervalUnion symmetric_difference(const IntervalUnion& u,
                                            const IntervalUnion& v);

 private:
  std::vector<Part> parts_;
};

// Sort, merge overlapping/touching pairs, drop zero-length ones.
// Accepts pairs with a <= b; non-finite endpoints are rejected.
IntervalUnion normalize_intervals(
    const std::vector<std::pair<double, double>>& raw);

IntervalUnion unite(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion intersect(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion symmetric_difference(const IntervalUnion& u,
                                   const IntervalUnion& v);

double measure(const IntervalUnion& u);

// Maximal runs of inside=true become intervals [t_first, t_after_run);
// a run that reaches the final sample closes at that sample's t.
IntervalUnion from_indicator(
    const std::vector<std::pair<double, bool>>& samples);

// Exactly r disjoint parts with total length `total` inside `window`,
// placed by sampling gap and length fractions from a seeded stream.
IntervalUnion random_union(std::size_t r, double total,
                           std::pair<double, double> window,
                           std::uint64_t seed);

// Canonical finite union of arcs on [0, 2*pi). Wraparound input arcs are
// stored split at 0/2*pi so parts stay totally ordered; parts touching only
// across the cut are kept separate. Immutable after construction.
class ArcUnion {
 public:
  using Arc = std::pair<double, double>;

  ArcUnion() = default;

  // Raw arcs (a, b) with b > a and b - a <= 2*pi, any real offset.
  // An arc with b - a >= 2*pi becomes the full circle.
  static ArcUnion from_raw(const std::vector<Arc>& raw);

  static ArcUnion full_circle();

  // The centered interval (-delta, delta), stored split at the cut.
  static ArcUnion centered_interval(double delta);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  double measure() const;

  // Every arc shifted by s (mod 2*pi), re-canonicalized.
  ArcUnion rotated(double s) const;

  bool operator==(const ArcUnion& other) const { return arcs_ == other.arcs_; }

 private:
  std::vector<Arc> arcs_;
};

double measure(const ArcUnion& u);

// r disjoint arcs with total measure `total` placed uniformly on the circle.
ArcUnion random_arcs(std::size_t r, double total, std::uint64_t seed);

}  // namespace unclab
