#include "lorentzkit/inequalities.hpp"

#include <cmath>
#include <numbers>

namespace lorentzkit {

std::string to_string(InequalityId id) {
  switch (id) {
    case InequalityId::H_p: return "H_p";
    case InequalityId::A_pq: return "A_pq";
    case InequalityId::A_pinf: return "A_pinf";
  }
  return "unknown";
}

double sharp_constant(const LorentzParams& params) {
  if (!(params.p >= 1.0) || !(params.p < params.n)) throw DomainError("need 1 <= p < n");
  return params.p / (params.n - params.p) * std::pow(params.omega_n(), -1.0 / params.n);
}

double sharp_constant_gamma_form(int n, double p) {
  if (n < 2 || !(p >= 1.0) || !(p < n)) throw DomainError("need n >= 2 and 1 <= p < n");
  return p / (n - p) * std::pow(std::tgamma(1.0 + 0.5 * n), 1.0 / n) / std::sqrt(std::numbers::pi);
}

bool within_band(double ratio, double sharp, double quad_error) {
  return ratio <= sharp * (1.0 + 1e-7) + 10.0 * quad_error;
}

namespace {

QuadResult scaled(QuadResult r, double k) {
  if (r.diverged) return r;
  r.value *= k;
  r.abs_error_estimate *= k;
  return r;
}

double relative(const QuadResult& r) {
  return r.value != 0.0 ? r.abs_error_estimate / std::abs(r.value) : 0.0;
}

}  // namespace

QuadResult hardy_lhs(const RadialProfile& u, const LorentzParams& params, const QuadOptions& opts) {
  const auto ctx = params.dimension();
  return scaled(power_moment(RadialFunction(u), params.p, params.n - params.p, 0.0, kInf, opts), ctx.sphere_area());
}

QuadResult gradient_energy(const RadialProfile& u, const LorentzParams& params,
                           const QuadOptions& opts) {
  const auto ctx = params.dimension();
  return scaled(power_moment(RadialFunction(derivative_profile(u)), params.p, params.n, 0.0, kInf, opts),
                ctx.sphere_area());
}

VerificationReport verify_hardy(const RadialProfile& u, const LorentzParams& params,
                                const QuadOptions& opts) {
  const auto left = hardy_lhs(u, params, opts);
  if (left.diverged) throw DivergenceError("hardy_lhs", "Hardy integral diverges");
  const auto right = gradient_energy(u, params, opts);
  if (right.diverged) throw DivergenceError("gradient", "gradient L^p energy diverges");

  VerificationReport r;
  r.inequality_id = InequalityId::H_p;
  r.params = params;
  r.lhs = std::pow((params.n - params.p) / params.p, params.p) * left.value;
  r.rhs = right.value;
  r.sharp_constant = 1.0;
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.quad_error = r.ratio * (relative(left) + relative(right));
  r.margin = r.sharp_constant - r.ratio;
  r.holds = within_band(r.ratio, r.sharp_constant, r.quad_error);
  return r;
}

VerificationReport make_embedding_report(const LorentzParams& params, const QuadResult& target,
                                         const QuadResult& gradient) {
  VerificationReport r;
  r.inequality_id = params.q_is_infinite() ? InequalityId::A_pinf : InequalityId::A_pq;
  r.params = params;
  r.lhs = target.value;
  r.rhs = gradient.value;
  r.sharp_constant = sharp_constant(params);
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.quad_error = r.ratio * (relative(target) + relative(gradient));
  r.margin = r.sharp_constant - r.ratio;
  r.holds = within_band(r.ratio, r.sharp_constant, r.quad_error);
  return r;
}

VerificationReport verify_embedding(const RadialProfile& u, const LorentzParams& params,
                                    const QuadOptions& opts) {
  const auto ctx = params.dimension();
  QuadResult target, gradient;
  try {
    target = radial_lorentz_norm(RadialFunction(u), target_index(params), ctx, opts);
  } catch (const DivergenceError& e) {
    throw DivergenceError("target", e.what());
  }
  if (target.diverged) throw DivergenceError("target", "||u||_{p*,q} diverges");
  try {
    gradient = radial_lorentz_norm(RadialFunction(derivative_profile(u)), gradient_index(params), ctx, opts);
  } catch (const DivergenceError& e) {
    throw DivergenceError("gradient", e.what());
  }
  if (gradient.diverged) throw DivergenceError("gradient", "||grad u||_{p,q} diverges");
  return make_embedding_report(params, target, gradient);
}

}  // namespace lorentzkit
