#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lorentzkit/profile.hpp"

namespace lorentzkit {

/// Endpoint information carried alongside a function so that integrals and
/// suprema can be classified (finite, divergent) before any quadrature runs.
struct EndpointHints {
  PowerAsymptote head;           ///< behaviour as x -> 0+
  PowerAsymptote tail;           ///< behaviour as x -> inf (unused if support is bounded)
  double support_end = kInf;     ///< function vanishes on [support_end, inf)
};

/// A nonnegative function of one positive variable, either held exactly as a
/// piecewise power-affine profile or evaluated lazily through a callable.
/// `Domain` distinguishes radii from measures at the type level.
template <class Domain>
class PiecewiseFunction {
 public:
  using Eval = std::function<double(double)>;

  /// Exact representation; the profile is extended by zero past its last
  /// segment.
  PiecewiseFunction(RadialProfile exact);  // NOLINT(google-explicit-constructor)

  PiecewiseFunction(Eval f, std::vector<double> breakpoints, EndpointHints hints,
                    bool non_increasing);

  double operator()(double x) const;

  const std::optional<RadialProfile>& exact() const { return exact_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const EndpointHints& hints() const { return hints_; }
  double support_end() const { return hints_.support_end; }
  bool non_increasing() const { return non_increasing_; }

 private:
  std::optional<RadialProfile> exact_;
  Eval eval_;
  std::vector<double> breakpoints_;
  EndpointHints hints_;
  bool non_increasing_ = false;
};

struct RadialDomain {};
struct MeasureDomain {};

/// r |-> value on (0, inf).
using RadialFunction = PiecewiseFunction<RadialDomain>;
/// t |-> value on the measure axis (0, inf); home of decreasing rearrangements.
using OneDimFunction = PiecewiseFunction<MeasureDomain>;

extern template class PiecewiseFunction<RadialDomain>;
extern template class PiecewiseFunction<MeasureDomain>;

/// Hints derived from the first/last segments of a profile.
EndpointHints hints_of(const RadialProfile& p);

/// Reinterprets the exact representation of a function on the other axis.
inline OneDimFunction as_one_dim(const RadialProfile& p) { return OneDimFunction(p); }

}  // namespace lorentzkit
