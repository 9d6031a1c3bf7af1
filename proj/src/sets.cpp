#include "unclab/sets.hpp"

#include <algorithm>
#include <cmath>

#include "unclab/errors.hpp"
#include "unclab/numeric.hpp"
#include "unclab/rng.hpp"

namespace unclab {

namespace {

std::vector<std::pair<double, double>> merge_sorted(
    std::vector<std::pair<double, double>> parts) {
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& [a, b] : parts) {
    if (a >= b) continue;  // zero-length
    if (!out.empty() && a <= out.back().second) {
      out.back().second = std::max(out.back().second, b);
    } else {
      out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

double IntervalUnion::measure() const {
  double t = 0.0;
  for (const auto& [a, b] : parts_) t += b - a;
  return t;
}

double measure(const IntervalUnion& u) { return u.measure(); }

IntervalUnion normalize_intervals(
    const std::vector<std::pair<double, double>>& raw) {
  for (const auto& [a, b] : raw) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw MalformedInputError("normalize_intervals: non-finite endpoint");
    if (a > b)
      throw MalformedInputError("normalize_intervals: interval with a > b");
  }
  IntervalUnion u;
  u.parts_ = merge_sorted(raw);
  return u;
}

namespace {

// Sweep both unions jointly and keep points where `keep(in_u, in_v)` holds.
template <typename Keep>
IntervalUnion combine(const IntervalUnion& u, const IntervalUnion& v,
                      Keep keep) {
  struct Event {
    double x;
    int which;  // 0 = u, 1 = v
    int delta;  // +1 open, -1 close
  };
  std::vector<Event> ev;
  for (const auto& [a, b] : u.parts()) {
    ev.push_back({a, 0, +1});
    ev.push_back({b, 0, -1});
  }
  for (const auto& [a, b] : v.parts()) {
    ev.push_back({a, 1, +1});
    ev.push_back({b, 1, -1});
  }
  std::sort(ev.begin(), ev.end(),
            [](const Event& l, const Event& r) { return l.x < r.x; });
  std::vector<std::pair<double, double>> parts;
  int in[2] = {0, 0};
  double open_at = 0.0;
  bool open = false;
  std::size_t i = 0;
  while (i < ev.size()) {
    const double x = ev[i].x;
    while (i < ev.size() && ev[i].x == x) {
      in[ev[i].which] += ev[i].delta;
      ++i;
    }
    const bool inside = keep(in[0] > 0, in[1] > 0);
    if (inside && !open) {
      open = true;
      open_at = x;
    } else if (!inside && open) {
      open = false;
      parts.emplace_back(open_at, x);
    }
  }
  return normalize_intervals(parts);
}

}  // namespace

IntervalUnion unite(const IntervalUnion& u, const IntervalUnion& v) {
  return combine(u, v, [](bool a, bool b) { return a || b; });
}

IntervalUnion intersect(const IntervalUnion& u, const IntervalUnion& v) {
  return combine(u, v, [](bool a, bool b) { return a && b; });
}

IntervalUnion symmetric_difference(const IntervalUnion& u,
                                   const IntervalUnion& v) {
  return combine(u, v, [](bool a, bool b) { return a != b; });
}

IntervalUnion from_indicator(
    const std::vector<std::pair<double, bool>>& samples) {
  if (samples.size() < 2)
    throw MalformedInputError("from_indicator: need at least 2 samples");
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (!(samples[i].first < samples[i + 1].first))
      throw MalformedInputError("from_indicator: samples not sorted by t");
  }
  std::vector<std::pair<double, double>> parts;
  std::size_t i = 0;
  while (i < samples.size()) {
    if (!samples[i].second) {
      ++i;
      continue;
    }
    const double start = samples[i].first;
    while (i < samples.size() && samples[i].second) ++i;
    const double end =
        (i < samples.size()) ? samples[i].first : samples.back().first;
    parts.emplace_back(start, end);
  }
  return normalize_intervals(parts);
}

IntervalUnion random_union(std::size_t r, double total,
                           std::pair<double, double> window,
                           std::uint64_t seed) {
  const double width = window.second - window.first;
  if (r < 1 || total <= 0.0)
    throw InfeasibleRequestError("random_union: need r >= 1 and total > 0");
  if (!(total < width) && !(r == 1 && total <= width))
    throw InfeasibleRequestError(
        "random_union: window cannot host the requested parts");
  Rng rng(seed);
  // r length fractions and r+1 gap fractions, rescaled to fit exactly.
  std::vector<double> len(r), gap(r + 1);
  double lsum = 0.0, gsum = 0.0;
  for (auto& x : len) {
    x = rng.uniform_open();
    lsum += x;
  }
  for (auto& x : gap) {
    x = rng.uniform_open();
    gsum += x;
  }
  const double slack = width - total;
  std::vector<std::pair<double, double>> parts;
  double pos = window.first;
  for (std::size_t i = 0; i < r; ++i) {
    pos += slack * gap[i] / gsum;
    const double li = total * len[i] / lsum;
    parts.emplace_back(pos, pos + li);
    pos += li;
  }
  IntervalUnion out = normalize_intervals(parts);
  if (out.size() != r)
    throw InfeasibleRequestError("random_union: parts collapsed under merge");
  return out;
}

double ArcUnion::measure() const {
  double t = 0.0;
  for (const auto& [a, b] : arcs_) t += b - a;
  return t;
}

double measure(const ArcUnion& u) { return u.measure(); }

ArcUnion ArcUnion::from_raw(const std::vector<Arc>& raw) {
  std::vector<Arc> split;
  for (const auto& [a, b] : raw) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw MalformedInputError("ArcUnion: non-finite endpoint");
    if (b < a) throw MalformedInputError("ArcUnion: arc with b < a");
    const double len = b - a;
    if (len == 0.0) continue;
    if (len >= kTwoPi) {
      split.clear();
      split.emplace_back(0.0, kTwoPi);
      break;
    }
    const double alpha = wrap_angle(a);
    if (alpha + len <= kTwoPi) {
      split.emplace_back(alpha, alpha + len);
    } else {
      split.emplace_back(alpha, kTwoPi);
      split.emplace_back(0.0, alpha + len - kTwoPi);
    }
  }
  std::sort(split.begin(), split.end());
  ArcUnion u;
  for (const auto& [a, b] : split) {
    if (!u.arcs_.empty() && a <= u.arcs_.back().second) {
      u.arcs_.back().second = std::max(u.arcs_.back().second, b);
    } else {
      u.arcs_.emplace_back(a, b);
    }
  }
  return u;
}

ArcUnion ArcUnion::full_circle() { return from_raw({{0.0, kTwoPi}}); }

ArcUnion ArcUnion::centered_interval(double delta) {
  if (delta <= 0.0)
    throw MalformedInputError("centered_interval: delta must be > 0");
  if (delta >= kPi) return full_circle();
  return from_raw({{-delta, delta}});
}

ArcUnion ArcUnion::rotated(double s) const {
  std::vector<Arc> raw;
  raw.reserve(arcs_.size());
  for (const auto& [a, b] : arcs_) raw.emplace_back(a + s, b + s);
  return from_raw(raw);
}

ArcUnion random_arcs(std::size_t r, double total, std::uint64_t seed) {
  if (r < 1 || total <= 0.0 || total > kTwoPi)
    throw InfeasibleRequestError("random_arcs: need r >= 1, 0 < total <= 2pi");
  if (total == kTwoPi) return ArcUnion::full_circle();
  Rng rng(seed);
  std::vector<double> len(r), gap(r);
  double lsum = 0.0, gsum = 0.0;
  for (auto& x : len) {
    x = rng.uniform_open();
    lsum += x;
  }
  for (auto& x : gap) {
    x = rng.uniform_open();
    gsum += x;
  }
  const double slack = kTwoPi - total;
  const double offset = rng.uniform(0.0, kTwoPi);
  std::vector<ArcUnion::Arc> raw;
  double pos = offset;
  for (std::size_t i = 0; i < r; ++i) {
    pos += slack * gap[i] / gsum;
    const double li = total * len[i] / lsum;
    raw.emplace_back(pos, pos + li);
    pos += li;
  }
  return ArcUnion::from_raw(raw);
}

}  // namespace unclab
