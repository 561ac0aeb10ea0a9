#include "lorentzkit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace lorentzkit {

namespace {

double pow_edge(double x, double e) { return x == kInf ? kInf : std::pow(x, e); }

void require_power_transform(const RadialProfile& u, const LorentzParams& lp) {
  if (lp.q_is_infinite()) throw DomainError("power transform needs q < inf");
  if (!(lp.q > lp.p)) throw DomainError("power transform needs q > p");
  if (!is_decreasing(u)) throw DomainError("power transform needs a non-increasing profile");
}

bool power_class(const RadialProfile& u) {
  return std::all_of(u.segments().begin(), u.segments().end(),
                     [](const PowerAffineSegment& s) { return s.is_pure_power() || s.is_constant(); });
}

// Slope magnitude with the right-continuous convention (no breakpoint error).
double slope_at(const RadialProfile& u, double r) {
  if (r >= u.domain_end()) return 0.0;
  return std::abs(u.segments()[u.segment_index(r)].slope(r));
}

double value_at(const RadialProfile& u, double r) {
  if (r >= u.domain_end()) return 0.0;
  return std::max(0.0, u.segments()[u.segment_index(r)].value(r));
}

PowerAsymptote gradient_asymptote(const PowerAffineSegment& s, const PowerAsymptote& value, double sp) {
  if (s.c == 0.0) return {0.0, 0.0};
  const double k1 = 1.0 / sp - 1.0;  // (q - p) / p
  return {std::pow(value.coef, k1) * std::abs(s.c * s.alpha),
          value.exponent * (1.0 - sp) + sp * s.alpha - 1.0};
}

}  // namespace

RadialProfile dilate(const RadialProfile& u, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("dilation needs lambda > 0");
  std::vector<PowerAffineSegment> out;
  for (const auto& s : u.segments()) {
    out.push_back(make_segment(s.c * std::pow(lambda, s.alpha), s.alpha, s.d, s.lo / lambda,
                               s.hi == kInf ? kInf : s.hi / lambda));
  }
  return RadialProfile(std::move(out));
}

RadialFunction power_transform(const RadialProfile& u, const LorentzParams& params) {
  require_power_transform(u, params);
  const double s = params.p / params.q, k = params.q / params.p;
  if (power_class(u)) {
    std::vector<PowerAffineSegment> out;
    for (const auto& seg : u.segments()) {
      out.push_back(make_segment(seg.c == 0.0 ? 0.0 : std::pow(seg.c, k), seg.alpha,
                                 seg.c == 0.0 ? std::pow(seg.d, k) : 0.0, pow_edge(seg.lo, k),
                                 pow_edge(seg.hi, k)));
    }
    return RadialFunction(RadialProfile(std::move(out)));
  }
  const auto h = hints_of(u);
  EndpointHints vh;
  vh.head = {std::pow(h.head.coef, k), h.head.exponent};
  vh.tail = {std::pow(h.tail.coef, k), h.tail.exponent};
  vh.support_end = pow_edge(h.support_end, k);
  std::vector<double> bps;
  for (double b : u.breakpoints()) bps.push_back(std::pow(b, k));
  if (u.domain_end() != kInf) bps.push_back(std::pow(u.domain_end(), k));
  return RadialFunction([u, s, k](double r) { return std::pow(value_at(u, std::pow(r, s)), k); },
                        std::move(bps), vh, true);
}

RadialFunction power_transform_gradient(const RadialProfile& u, const LorentzParams& params) {
  require_power_transform(u, params);
  const double s = params.p / params.q, k = params.q / params.p;
  if (power_class(u)) {
    return RadialFunction(derivative_profile(power_transform(u, params).exact().value()));
  }
  const auto segs = u.segments();
  const auto h = hints_of(u);
  EndpointHints gh;
  gh.head = gradient_asymptote(segs.front(), h.head, s);
  if (h.support_end == kInf) gh.tail = gradient_asymptote(segs.back(), h.tail, s);
  gh.support_end = pow_edge(h.support_end, k);
  std::vector<double> bps;
  for (double b : u.breakpoints()) bps.push_back(std::pow(b, k));
  if (u.domain_end() != kInf) bps.push_back(std::pow(u.domain_end(), k));
  return RadialFunction(
      [u, s, k](double r) {
        const double x = std::pow(r, s);
        const double val = value_at(u, x);
        if (val <= 0.0) return 0.0;
        return std::pow(val, k - 1.0) * slope_at(u, x) * std::pow(r, s - 1.0);
      },
      std::move(bps), gh, false);
}

TransformedPair power_transform_pair(const RadialProfile& u, const LorentzParams& params) {
  return {RadialFunction(u), power_transform(u, params), params, TransformKind::power_composition};
}

TransformedPair dilation_pair(const RadialProfile& u, const LorentzParams& params, double lambda) {
  return {RadialFunction(u), RadialFunction(dilate(u, lambda)), params, TransformKind::dilation};
}

QuadResult gamma_weighted_norm(const RadialProfile& u, const LorentzParams& params, double gamma) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) throw DomainError("gamma must be a finite value >= 1");
  if (!is_decreasing(u)) throw DomainError("gamma_weighted_norm needs a non-increasing profile");
  const double a = (params.n - params.p) / params.p;

  // Normalize by a sampled estimate of sup r^a u(r) so that the gamma-th power stays in range.
  double scale = 0.0;
  const RadialFunction f(u);
  const double end = std::min(f.support_end(), 1e6);
  for (int i = 0; i <= 400; ++i) {
    const double r = end * std::pow(1e-9, 1.0 - i / 400.0) * (1.0 - 1e-12);
    scale = std::max(scale, std::pow(r, a) * f(r));
  }
  if (scale == 0.0) scale = 1.0;
  std::vector<PowerAffineSegment> scaled;
  for (auto s : u.segments()) {
    s.c /= scale;
    s.d /= scale;
    scaled.push_back(s);
  }
  const RadialFunction g{RadialProfile(std::move(scaled))};
  auto r = root_of(power_moment(g, gamma, gamma * a + 1.0), gamma);
  if (r.diverged) return r;
  r.value *= scale;
  r.abs_error_estimate *= scale;
  return r;
}

void require_hardy_admissible(const RadialProfile& u, const LorentzParams& params) {
  if (!(params.p > 1.0)) throw DomainError("Hardy transforms need p > 1");
  if (!is_decreasing(u)) throw DomainError("Hardy transforms need a non-increasing profile");
  const double end = u.support_end();
  if (end > 1.0 + 1e-12) throw DomainError("profile support exceeds the unit ball");
  const auto segs = u.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (s.lo >= end) break;
    if (s.c != 0.0 && s.lo == 0.0 && s.alpha < 1.0)
      throw DomainError("profile is not Lipschitz at the origin");
    const double right = (i + 1 < segs.size() && segs[i + 1].lo < end) ? segs[i + 1].value_at_lo() : 0.0;
    const double left = s.value_at_hi();
    if (std::abs(left - right) > 1e-10 * std::max(1.0, std::abs(left)))
      throw DomainError("profile is discontinuous (not Lipschitz)");
  }
}

double gradient_energy_tail(const RadialProfile& u, double p, int n, double r) {
  double total = 0.0;
  const double upper = std::min(1.0, u.domain_end());
  for (const auto& s : u.segments()) {
    const double lo = std::max(r, s.lo), hi = std::min(upper, s.hi);
    if (!(hi > lo) || s.c == 0.0) continue;
    total += power_dlog(std::pow(std::abs(s.c * s.alpha), p), p * (s.alpha - 1.0) + n, lo, hi).value;
  }
  return total;
}

RadialFunction hardy_auxiliary(const RadialProfile& u, const LorentzParams& params) {
  require_hardy_admissible(u, params);
  const double p = params.p;
  const int n = params.n;
  const double e = 1.0 - n / p;
  std::vector<double> bps;
  for (double b : u.breakpoints())
    if (b < 1.0) bps.push_back(b);
  const auto v = [u, p, n, e, bps](double r) {
    if (r >= 1.0) return 0.0;
    std::vector<double> cuts{r};
    for (double b : bps)
      if (b > r) cuts.push_back(b);
    cuts.push_back(1.0);
    const auto integrand = [&](double rho) { return std::pow(rho, e) * gradient_energy_tail(u, p, n, rho); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      total += integrate_dlog(integrand, cuts[i], cuts[i + 1]).value;
    return total;
  };
  EndpointHints h;
  h.head = {gradient_energy_tail(u, p, n, 0.0) * p / (n - p), e};
  h.support_end = 1.0;
  return RadialFunction(v, std::move(bps), h, true);
}

RadialFunction hardy_auxiliary_slope(const RadialProfile& u, const LorentzParams& params) {
  require_hardy_admissible(u, params);
  const double p = params.p;
  const int n = params.n;
  std::vector<double> bps;
  for (double b : u.breakpoints())
    if (b < 1.0) bps.push_back(b);
  EndpointHints h;
  h.head = {gradient_energy_tail(u, p, n, 0.0), -n / p};
  h.support_end = 1.0;
  return RadialFunction(
      [u, p, n](double r) { return std::pow(r, -n / p) * gradient_energy_tail(u, p, n, r); },
      std::move(bps), h, true);
}

HardyBound pointwise_hardy_bound(const RadialProfile& u, const LorentzParams& params, double rho) {
  require_hardy_admissible(u, params);
  if (!(rho > 0.0) || !(rho < 1.0)) throw DomainError("rho must lie in (0, 1)");
  const double p = params.p, n = params.n;
  const double w = (p - 1.0) * n / p;
  double tail = 0.0;
  const double upper = std::min(1.0, u.domain_end());
  for (const auto& s : u.segments()) {
    const double lo = std::max(rho, s.lo), hi = std::min(upper, s.hi);
    if (!(hi > lo) || s.c == 0.0) continue;
    tail += power_dlog(std::pow(std::abs(s.c * s.alpha), p), p * (s.alpha - 1.0) + w + 1.0, lo, hi).value;
  }
  HardyBound b;
  b.lhs = std::pow(value_at(u, rho), p);
  b.rhs = std::pow(p / (n - p), p - 1.0) * std::pow(rho, -(n - p) * (p - 1.0) / p) * tail;
  return b;
}

}  // namespace lorentzkit
