#pragma once

#include <span>
#include <vector>

#include "lorentzkit/errors.hpp"

namespace lorentzkit {

/// c * r^alpha + d on [lo, hi). Constant segments are normalized to c = 0,
/// alpha = 0 so that `is_constant()` is a single test.
struct PowerAffineSegment {
  double c = 0.0;
  double alpha = 0.0;
  double d = 0.0;
  double lo = 0.0;
  double hi = kInf;

  double value(double r) const;
  /// c * alpha * r^(alpha - 1).
  double slope(double r) const;
  /// Limit of the value as r -> lo+ (may be +inf when lo = 0, alpha < 0).
  double value_at_lo() const;
  /// Limit of the value as r -> hi-.
  double value_at_hi() const;

  bool is_constant() const { return c == 0.0; }
  bool is_pure_power() const { return d == 0.0; }
  bool is_non_increasing() const { return is_constant() || c * alpha < 0.0; }
  bool is_non_decreasing() const { return is_constant() || c * alpha > 0.0; }

  bool operator==(const PowerAffineSegment&) const = default;
};

/// Builds a segment, folding alpha == 0 into the offset.
PowerAffineSegment make_segment(double c, double alpha, double d, double lo, double hi);

/// Radial function on (0, domain_end) made of contiguous power-affine pieces.
/// Evaluation at a breakpoint uses the segment starting there.
class RadialProfile {
 public:
  /// Validates ordering, contiguity, tail decay and nonnegativity. Throws
  /// DomainError naming the offending segment index.
  explicit RadialProfile(std::vector<PowerAffineSegment> segments);

  static RadialProfile zero();
  /// Indicator of the ball of radius `radius`.
  static RadialProfile indicator(double radius);

  double operator()(double r) const { return eval(r); }
  double eval(double r) const;
  /// |f'(r)|; throws BreakpointError at a segment boundary.
  double derivative_magnitude(double r) const;

  std::span<const PowerAffineSegment> segments() const { return segments_; }
  /// Interior segment boundaries, ascending.
  std::vector<double> breakpoints() const;
  double domain_end() const { return segments_.back().hi; }
  /// Smallest R past which the profile vanishes identically (inf if none).
  double support_end() const;
  /// Index of the segment containing r (right-continuous convention).
  std::size_t segment_index(double r) const;

  bool operator==(const RadialProfile&) const = default;

 private:
  std::vector<PowerAffineSegment> segments_;
};

/// r -> f(r^s), exact on the (c, alpha, d) representation.
RadialProfile compose_power(const RadialProfile& f, double s);

/// True iff every segment is non-increasing and no breakpoint jumps upward.
bool is_decreasing(const RadialProfile& f);

/// |f'| as a profile of pure powers on the same segments.
RadialProfile derivative_profile(const RadialProfile& f);

/// Leading behaviour f(x) ~ coef * x^exponent.

struct PowerAsymptote {
  double coef = 0.0;
  double exponent = 0.0;
};
/// As x -> 0+ for a segment starting at 0; as x -> inf for a final segment.
PowerAsymptote head_asymptote(const PowerAffineSegment& s);
PowerAsymptote tail_asymptote(const PowerAffineSegment& s);

}  // namespace lorentzkit
