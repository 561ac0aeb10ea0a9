#include "lorentzkit/extremals.hpp"

#include <cmath>
#include <cstdio>
#include <future>

namespace lorentzkit {

namespace {

double decay_exponent(const LorentzParams& params) { return (params.n - params.p) / params.p; }

void require_finite_q(const LorentzParams& params) {
  if (params.q_is_infinite()) throw DomainError("q must be finite");
}

template <class T, class F>
auto parallel_map(std::span<const T> items, F f) {
  using R = decltype(f(items[0]));
  std::vector<std::future<R>> jobs;
  jobs.reserve(items.size());
  for (const auto& x : items) jobs.push_back(std::async(std::launch::async, f, std::cref(x)));
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

RadialProfile make_v_eps(double epsilon, const LorentzParams& params) {
  const double a = decay_exponent(params);
  if (!(epsilon > 0.0) || !(epsilon < a)) throw DomainError("epsilon must lie in (0, (n-p)/p)");
  const double slope = a - epsilon;
  const double edge = 1.0 + 1.0 / slope;
  return RadialProfile({make_segment(1.0, -slope, 0.0, 0.0, 1.0),
                        make_segment(-slope, 1.0, 1.0 + slope, 1.0, edge),
                        make_segment(0.0, 0.0, 0.0, edge, kInf)});
}

double grad_norm_closed_form(double epsilon, const LorentzParams& params) {
  require_finite_q(params);
  const double a = decay_exponent(params);
  if (!(epsilon > 0.0) || !(epsilon < a)) throw DomainError("epsilon must lie in (0, (n-p)/p)");
  const double n = params.n, p = params.p, q = params.q;
  const double slope = a - epsilon;
  const double edge = 1.0 + 1.0 / slope;
  const double bracket = 1.0 / epsilon + (p / n) * std::expm1(n * q / p * std::log(edge));
  return n * std::pow(params.omega_n(), q / p) * std::pow(slope, q) * bracket / q;
}

EpsilonFamilyPoint make_family_point(double epsilon, const LorentzParams& params) {
  require_finite_q(params);
  EpsilonFamilyPoint pt;
  pt.epsilon = epsilon;
  pt.params = params;
  pt.profile = make_v_eps(epsilon, params);
  pt.grad_norm_q = grad_norm_closed_form(epsilon, params);
  const auto target =
      radial_lorentz_norm(RadialFunction(pt.profile), target_index(params), params.dimension());
  if (target.diverged) throw DivergenceError("target", "||v_eps||_{p*,q} diverges");
  pt.target_norm_q = std::pow(target.value, params.q);
  pt.ratio = std::pow(pt.grad_norm_q, 1.0 / params.q) / target.value;
  pt.quad_error = target.abs_error_estimate / target.value;
  return pt;
}

double sweep_limit(const LorentzParams& params) {
  return std::pow(params.omega_n(), 1.0 / params.n) * decay_exponent(params);
}

std::vector<SweepRow> epsilon_sweep(const LorentzParams& params, std::span<const double> epsilons) {
  require_finite_q(params);
  const double limit = sweep_limit(params);
  return parallel_map(epsilons, [&params, limit](const double& eps) {
    const auto pt = make_family_point(eps, params);
    return SweepRow{eps, pt.ratio, limit, std::abs(pt.ratio - limit) / limit};
  });
}

std::vector<double> default_epsilons() { return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

RadialProfile make_psi(const LorentzParams& params) {
  return RadialProfile({make_segment(1.0, -decay_exponent(params), 0.0, 0.0, kInf)});
}

PsiWeakNorms psi_weak_norms_closed_form(const LorentzParams& params) {
  const double omega = params.omega_n();
  return {std::pow(omega, 1.0 / params.p_star()),
          std::pow(omega, 1.0 / params.p) * decay_exponent(params)};
}

VerificationReport psi_closed_form_report(const LorentzParams& params) {
  auto lp = params;
  lp.q = kInf;
  const auto w = psi_weak_norms_closed_form(lp);
  return make_embedding_report(lp, {w.target, 0.0, false}, {w.gradient, 0.0, false});
}

RadialProfile shifted_psi(const LorentzParams& params, double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  const double a = decay_exponent(params);
  const double edge = std::pow(delta, -1.0 / a);
  return RadialProfile(
      {make_segment(1.0, -a, -delta, 0.0, edge), make_segment(0.0, 0.0, 0.0, edge, kInf)});
}

RadialProfile capped_psi(const LorentzParams& params, double radius) {
  if (!(radius > 1.0)) throw DomainError("cap radius must exceed 1");
  const double a = decay_exponent(params);
  const double floor = std::pow(radius, -a);
  return RadialProfile({make_segment(0.0, 0.0, std::pow(radius, a) - floor, 0.0, 1.0 / radius),
                        make_segment(1.0, -a, -floor, 1.0 / radius, radius),
                        make_segment(0.0, 0.0, 0.0, radius, kInf)});
}

std::vector<EvidenceRow> non_attainment_evidence(const LorentzParams& params,
                                                 std::span<const FamilyMember> family) {
  require_finite_q(params);
  return parallel_map(family, [&params](const FamilyMember& m) {
    const auto r = verify_embedding(m.profile, params);
    return EvidenceRow{m.profile_id, r.ratio, r.margin, r.quad_error,
                       r.margin > 10.0 * r.quad_error};
  });
}

std::vector<FamilyMember> v_eps_family(const LorentzParams& params,
                                       std::span<const double> epsilons) {
  std::vector<FamilyMember> out;
  for (double e : epsilons) {
    char id[64];
    std::snprintf(id, sizeof id, "v_eps:%g", e);
    out.push_back({id, make_v_eps(e, params)});
  }
  return out;
}

}  // namespace lorentzkit
