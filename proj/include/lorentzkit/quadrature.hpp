#pragma once

#include <functional>

#include "lorentzkit/function.hpp"

namespace lorentzkit {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  /// When set, `value` is meaningless and must not be consumed.
  bool diverged = false;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    abs_error_estimate += o.abs_error_estimate;
    diverged = diverged || o.diverged;
    return *this;
  }
};

inline QuadResult diverged_result() { return {kInf, kInf, true}; }

struct QuadOptions {
  /// Relative termination tolerance of the double-exponential rules.
  double tolerance = 1e-11;
};

/// \int_a^b h(x) dx/x, computed on the substituted axis x = e^s. `a` may be 0
/// and `b` may be inf; the integrand must already be known to be integrable.
QuadResult integrate_dlog(const std::function<double(double)>& h, double a, double b,
                          const QuadOptions& opts = {});

/// Closed form of \int_a^b coef * x^kappa dx/x (diverged when infinite).
QuadResult power_dlog(double coef, double kappa, double a, double b);

/// \int_a^b f(x)^q x^w dx/x over the panels of f. Pure-power and constant
/// segments of exact functions are integrated in closed form; endpoint
/// divergence is decided from the hints before any numeric work.
template <class D>
QuadResult power_moment(const PiecewiseFunction<D>& f, double q, double w, double a = 0.0,
                        double b = kInf, const QuadOptions& opts = {});

/// I -> I^(1/q) with the error estimate propagated to first order.
QuadResult root_of(const QuadResult& integral, double q);

}  // namespace lorentzkit
