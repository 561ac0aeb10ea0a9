#include "lorentzkit/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lorentzkit {

namespace {

constexpr double kJoinTol = 1e-12;
constexpr double kSignTol = 1e-10;

std::string seg_msg(std::size_t i, const std::string& what) {
  return "segment " + std::to_string(i) + ": " + what;
}

double scaled_pow(double x, double e) {
  if (x == kInf) return e > 0 ? kInf : (e < 0 ? 0.0 : 1.0);
  return std::pow(x, e);
}

}  // namespace

double PowerAffineSegment::value(double r) const {
  if (c == 0.0) return d;
  return c * std::pow(r, alpha) + d;
}

double PowerAffineSegment::slope(double r) const {
  if (c == 0.0) return 0.0;
  return c * alpha * std::pow(r, alpha - 1.0);
}

double PowerAffineSegment::value_at_lo() const {
  if (c == 0.0) return d;
  if (lo == 0.0) {
    if (alpha < 0.0) return c > 0.0 ? kInf : -kInf;
    return d;
  }
  return value(lo);
}

double PowerAffineSegment::value_at_hi() const {
  if (c == 0.0) return d;
  if (hi == kInf) {
    if (alpha < 0.0) return d;
    return c > 0.0 ? kInf : -kInf;
  }
  return value(hi);
}

PowerAffineSegment make_segment(double c, double alpha, double d, double lo, double hi) {
  if (alpha == 0.0) {
    d += c;
    c = 0.0;
  }
  if (c == 0.0) alpha = 0.0;
  return {c, alpha, d, lo, hi};
}

RadialProfile::RadialProfile(std::vector<PowerAffineSegment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw DomainError("profile has no segments");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    auto& s = segments_[i];
    s = make_segment(s.c, s.alpha, s.d, s.lo, s.hi);
    if (!std::isfinite(s.c) || !std::isfinite(s.alpha) || !std::isfinite(s.d))
      throw DomainError(seg_msg(i, "non-finite coefficient"));
    if (i == 0 && s.lo != 0.0) throw DomainError(seg_msg(i, "first segment must start at 0"));
    if (!(s.lo >= 0.0) || !(s.lo < s.hi)) throw DomainError(seg_msg(i, "requires 0 <= lo < hi"));
    if (i > 0) {
      const double prev = segments_[i - 1].hi;
      if (std::abs(prev - s.lo) > kJoinTol * std::max(1.0, std::abs(prev)))
        throw DomainError(seg_msg(i, prev < s.lo ? "gap before segment" : "overlaps previous segment"));
      s.lo = prev;
    }
    if (s.hi == kInf && i + 1 != segments_.size())
      throw DomainError(seg_msg(i, "only the last segment may extend to infinity"));
    if (s.hi == kInf && !(s.c == 0.0 || (s.alpha < 0.0 && s.d == 0.0)))
      throw DomainError(seg_msg(i, "an unbounded segment must be constant or a decaying pure power"));

    const double a = s.value_at_lo();
    const double b = s.value_at_hi();
    double scale = std::max(1.0, std::abs(s.d));
    if (std::isfinite(a)) scale = std::max(scale, std::abs(a - s.d));
    if (std::isfinite(b)) scale = std::max(scale, std::abs(b - s.d));
    if (a < -kSignTol * scale || b < -kSignTol * scale)
      throw DomainError(seg_msg(i, "negative values"));
  }
}

RadialProfile RadialProfile::zero() { return RadialProfile({{0.0, 0.0, 0.0, 0.0, kInf}}); }

RadialProfile RadialProfile::indicator(double radius) {
  if (!(radius > 0.0)) throw DomainError("indicator radius must be positive");
  return RadialProfile({{0.0, 0.0, 1.0, 0.0, radius}, {0.0, 0.0, 0.0, radius, kInf}});
}

std::size_t RadialProfile::segment_index(double r) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), r,
                             [](double x, const PowerAffineSegment& s) { return x < s.lo; });
  return static_cast<std::size_t>(std::distance(segments_.begin(), it)) - 1;
}

double RadialProfile::eval(double r) const {
  if (!(r > 0.0) || !(r < domain_end()))
    throw DomainError("radius " + std::to_string(r) + " outside profile domain");
  return std::max(0.0, segments_[segment_index(r)].value(r));
}

double RadialProfile::derivative_magnitude(double r) const {
  if (!(r > 0.0) || !(r < domain_end()))
    throw DomainError("radius " + std::to_string(r) + " outside profile domain");
  const auto i = segment_index(r);
  const auto& s = segments_[i];
  const double tol = 1e-14 * std::max(1.0, r);
  if ((i > 0 && std::abs(r - s.lo) <= tol) || (s.hi != kInf && std::abs(s.hi - r) <= tol))
    throw BreakpointError("derivative requested at breakpoint " + std::to_string(r));
  return std::abs(s.slope(r));
}

std::vector<double> RadialProfile::breakpoints() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < segments_.size(); ++i) out.push_back(segments_[i].lo);
  return out;
}

double RadialProfile::support_end() const {
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    if (!(it->c == 0.0 && it->d == 0.0)) return it->hi;
  }
  return 0.0;
}

RadialProfile compose_power(const RadialProfile& f, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("compose_power needs s > 0");
  std::vector<PowerAffineSegment> out;
  const double inv = 1.0 / s;
  for (const auto& seg : f.segments()) {
    out.push_back(make_segment(seg.c, seg.alpha * s, seg.d, scaled_pow(seg.lo, inv),
                               scaled_pow(seg.hi, inv)));
  }
  return RadialProfile(std::move(out));
}

bool is_decreasing(const RadialProfile& f) {
  const auto segs = f.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (!segs[i].is_non_increasing()) return false;
    if (i + 1 < segs.size()) {
      const double left = segs[i].value_at_hi();
      const double right = segs[i + 1].value_at_lo();
      if (right > left + kJoinTol * std::max(1.0, std::abs(left))) return false;
    }
  }
  return true;
}

RadialProfile derivative_profile(const RadialProfile& f) {
  std::vector<PowerAffineSegment> out;
  for (const auto& s : f.segments()) {
    if (s.is_constant())
      out.push_back({0.0, 0.0, 0.0, s.lo, s.hi});
    else
      out.push_back(make_segment(std::abs(s.c * s.alpha), s.alpha - 1.0, 0.0, s.lo, s.hi));
  }
  return RadialProfile(std::move(out));
}

PowerAsymptote head_asymptote(const PowerAffineSegment& s) {
  if (s.c == 0.0) return {s.d, 0.0};
  if (s.d == 0.0 || s.alpha < 0.0) return {s.c, s.alpha};
  return {s.d, 0.0};
}

PowerAsymptote tail_asymptote(const PowerAffineSegment& s) {
  if (s.c == 0.0) return {s.d, 0.0};
  if (s.d == 0.0 || s.alpha > 0.0) return {s.c, s.alpha};
  return {s.d, 0.0};
}

}  // namespace lorentzkit
