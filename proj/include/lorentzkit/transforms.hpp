#pragma once

#include "lorentzkit/norms.hpp"

namespace lorentzkit {

enum class TransformKind { dilation, power_composition, gamma_weighted, hardy_auxiliary };

/// A source function together with one of the constructive transforms applied to it.
struct TransformedPair {
  RadialFunction source;
  RadialFunction image;
  LorentzParams params;
  TransformKind kind;
};

/// r |-> u(lambda r), exact in the power-affine class.
RadialProfile dilate(const RadialProfile& u, double lambda);

/// v(r) = u(r^(p/q))^(q/p) for a non-increasing u and p < q < inf. Pure powers
/// are fixed points; segments with an offset leave the power-affine class.
RadialFunction power_transform(const RadialProfile& u, const LorentzParams& params);

/// |v'(r)| = u(r^s)^((q-p)/p) |u'(r^s)| r^(s-1), s = p/q.
RadialFunction power_transform_gradient(const RadialProfile& u, const LorentzParams& params);

TransformedPair power_transform_pair(const RadialProfile& u, const LorentzParams& params);
TransformedPair dilation_pair(const RadialProfile& u, const LorentzParams& params, double lambda);

/// ( \int_0^inf [u(r) r^((n-p)/p + 1/gamma)]^gamma dr/r )^(1/gamma), the L^gamma norm
/// of r^((n-p)/p) u(r); tends to its sup as gamma -> inf.
QuadResult gamma_weighted_norm(const RadialProfile& u, const LorentzParams& params, double gamma);

/// v(r) = \int_r^1 rho^(-n/p) \int_rho^1 |u'(t)|^p t^(n-1) dt drho, for u
/// non-increasing, Lipschitz, supported in the unit ball, 1 < p < n.
RadialFunction hardy_auxiliary(const RadialProfile& u, const LorentzParams& params);

/// |v'(r)| = r^(-n/p) \int_r^1 |u'|^p t^(n-1) dt for the function above.
RadialFunction hardy_auxiliary_slope(const RadialProfile& u, const LorentzParams& params);

/// \int_r^1 |u'(t)|^p t^(n-1) dt in closed form.
double gradient_energy_tail(const RadialProfile& u, double p, int n, double r);

struct HardyBound {
  double lhs = 0.0;  ///< u(rho)^p
  double rhs = 0.0;  ///< Holder bound, always >= lhs
};

HardyBound pointwise_hardy_bound(const RadialProfile& u, const LorentzParams& params, double rho);

/// Throws DomainError unless u meets the admissibility conditions of
/// hardy_auxiliary.
void require_hardy_admissible(const RadialProfile& u, const LorentzParams& params);

}  // namespace lorentzkit
