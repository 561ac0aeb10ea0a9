#pragma once

#include <iosfwd>
#include <vector>

#include "lorentzkit/function.hpp"

namespace lorentzkit {

/// Volume of the unit ball of R^n, pi^(n/2) / Gamma(1 + n/2).
double unit_ball_volume(int n);

struct DimensionContext {
  int n = 3;
  double omega_n = 0.0;

  /// Throws DomainError for n < 2.
  static DimensionContext of(int n);
  /// Area of the unit sphere, n * omega_n.
  double sphere_area() const { return n * omega_n; }
};

/// |{x in R^n : u(|x|) > level}|. Throws DivergenceError("distribution", ...)
/// when the superlevel set has infinite measure at a positive level.
double distribution_function(const RadialFunction& u, const DimensionContext& ctx, double level);

/// |{x : u(|x|) >= level}|, the left limit of the distribution function.
double distribution_function_closed(const RadialFunction& u, const DimensionContext& ctx,
                                    double level);

/// u*(t) = sup{s : mu_u(s) > t}. Decreasing inputs take the exact path
/// u*(t) = u((t / omega_n)^(1/n)); other inputs are rearranged lazily by a
/// level search over the distribution function.
OneDimFunction decreasing_rearrangement(const RadialFunction& u, const DimensionContext& ctx);

/// u#(r) = u*(omega_n r^n).
RadialFunction symmetric_rearrangement(const RadialFunction& u, const DimensionContext& ctx);

/// Nonnegative cell values of equal measure.
struct SampledFunction {
  std::vector<double> values;
  double cell_measure = 1.0;

  /// Throws DomainError on negative values or non-positive cell measure.
  SampledFunction(std::vector<double> v, double cell);

  double total_measure() const { return cell_measure * static_cast<double>(values.size()); }
};

/// Values sorted in non-increasing order, same cell measure.
SampledFunction rearrange_sampled(const SampledFunction& f);

/// The step function t |-> f*_k on [k h, (k+1) h), zero past the last cell.
OneDimFunction step_function(const SampledFunction& f);

/// One-column CSV: a `# cell_measure=<h>` line, a `value` header, one value per row.
void write_csv(std::ostream& os, const SampledFunction& f);
SampledFunction read_sampled_csv(std::istream& is);

}  // namespace lorentzkit
