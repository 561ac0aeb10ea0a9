#pragma once

#include "lorentzkit/quadrature.hpp"
#include "lorentzkit/rearrange.hpp"

namespace lorentzkit {

/// Dimension and exponents of an embedding problem: 1 <= p < n, q in [1, inf].
struct LorentzParams {
  int n = 3;
  double p = 2.0;
  double q = 2.0;

  /// Validates the ranges above; throws DomainError otherwise.
  static LorentzParams make(int n, double p, double q);

  /// Sobolev conjugate np / (n - p).
  double p_star() const { return n * p / (n - p); }
  double omega_n() const { return unit_ball_volume(n); }
  bool q_is_infinite() const { return q == kInf; }
  DimensionContext dimension() const { return DimensionContext::of(n); }
};

/// The two indices of a Lorentz space L^{p,q}.
struct LorentzIndex {
  double p = 2.0;
  double q = 2.0;
};

/// L^{p*, q}: the space of the function itself.
inline LorentzIndex target_index(const LorentzParams& lp) { return {lp.p_star(), lp.q}; }
/// L^{p, q}: the space of the gradient.
inline LorentzIndex gradient_index(const LorentzParams& lp) { return {lp.p, lp.q}; }

/// ( \int_0^upper [u*(t) t^(1/p)]^q dt/t )^(1/q). Requires q < inf and a
/// non-increasing argument (DomainError otherwise).
QuadResult lorentz_quasinorm(const OneDimFunction& ustar, LorentzIndex idx, double upper = kInf,
                             const QuadOptions& opts = {});

/// sup_t t^(1/p) u*(t). Throws DivergenceError("weak", ...) when unbounded.
double weak_norm(const OneDimFunction& ustar, double p);

/// t |-> (1/t) \int_0^t f*(s) ds.
OneDimFunction maximal_function(const OneDimFunction& fstar);

/// \int_0^t f(s) ds for a non-increasing f, closed form on exact inputs.
std::function<double(double)> running_integral(const OneDimFunction& f);

/// || t^(1/p - 1/q) f**(t) ||_{L^q(0, domain_measure)}. Needs p > 1, q < inf.
QuadResult equivalent_norm(const OneDimFunction& fstar, LorentzIndex idx, double domain_measure);

/// f < g in the Hardy-Littlewood-Polya sense on (0, domain_measure): partial
/// integrals ordered on a 512-point grid and equal totals.
bool hlp_majorization(const OneDimFunction& fstar, const OneDimFunction& gstar,
                      double domain_measure);

/// ||u||_{p,q} of a radial function, rearranging first (q = inf uses the weak norm).
QuadResult radial_lorentz_norm(const RadialFunction& u, LorentzIndex idx,
                               const DimensionContext& ctx, const QuadOptions& opts = {});

/// Plain L^p norm n omega_n \int u(r)^p r^(n-1) dr, raised to 1/p.
QuadResult radial_lp_norm(const RadialFunction& u, double p, const DimensionContext& ctx,
                          const QuadOptions& opts = {});

}  // namespace lorentzkit
