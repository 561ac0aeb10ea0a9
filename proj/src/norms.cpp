#include "lorentzkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace lorentzkit {

LorentzParams LorentzParams::make(int n, double p, double q) {
  if (n < 2) throw DomainError("dimension must be >= 2");
  if (!(p >= 1.0) || !(p < n)) throw DomainError("need 1 <= p < n");
  if (!(q >= 1.0)) throw DomainError("need q >= 1 or q = inf");
  return {n, p, q};
}

namespace {

// Limit of t^(1/p) * coef * t^e at an endpoint; `at_zero` picks the end.
double scaled_limit(const PowerAsymptote& a, double p, bool at_zero) {
  if (a.coef == 0.0) return 0.0;
  const double e = a.exponent + 1.0 / p;
  if (e == 0.0) return a.coef;
  if ((e > 0.0) == at_zero) return 0.0;
  return a.coef > 0.0 ? kInf : 0.0;
}

double golden_max(const std::function<double(double)>& g, double lo, double hi) {
  // Maximizes g(e^s) over s in [log lo, log hi].
  constexpr double kPhi = 0.6180339887498949;
  double a = std::log(lo), b = std::log(hi);
  double x1 = b - kPhi * (b - a), x2 = a + kPhi * (b - a);
  double f1 = g(std::exp(x1)), f2 = g(std::exp(x2));
  for (int i = 0; i < 200 && (b - a) > 1e-12 * std::max(1.0, std::abs(a) + std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kPhi * (b - a);
      f2 = g(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kPhi * (b - a);
      f1 = g(std::exp(x1));
    }
  }
  return std::max(f1, f2);
}

// Max of g over a finite positive interval: sample then golden refinement.
double panel_max(const std::function<double(double)>& g, double lo, double hi) {
  constexpr int kSamples = 48;
  const double x0 = lo * (1.0 + 1e-12), x1 = hi * (1.0 - 1e-12);
  const double step = std::log(x1 / x0) / (kSamples - 1);
  double best = -kInf;
  int best_i = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double v = g(x0 * std::exp(step * i));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double a = x0 * std::exp(step * std::max(0, best_i - 1));
  const double b = x0 * std::exp(step * std::min(kSamples - 1, best_i + 1));
  return std::max(best, golden_max(g, a, b));
}

double segment_weak_sup(const PowerAffineSegment& s, double p) {
  double best = 0.0;
  const double inv_p = 1.0 / p;
  best = std::max(best, s.lo == 0.0 ? scaled_limit(head_asymptote(s), p, true)
                                    : std::pow(s.lo, inv_p) * s.value(s.lo));
  best = std::max(best, s.hi == kInf ? scaled_limit(tail_asymptote(s), p, false)
                                     : std::pow(s.hi, inv_p) * s.value_at_hi());
  if (s.c != 0.0 && s.d != 0.0) {
    // d/dt [t^(1/p) (c t^b + d)] = 0  <=>  t^b = -d / (c (1 + p b)).
    const double rhs = -s.d / (s.c * (1.0 + p * s.alpha));
    if (rhs > 0.0 && std::isfinite(rhs)) {
      const double t = std::pow(rhs, 1.0 / s.alpha);
      if (t > s.lo && t < s.hi) best = std::max(best, std::pow(t, inv_p) * s.value(t));
    }
  }
  return best;
}

}  // namespace

QuadResult lorentz_quasinorm(const OneDimFunction& ustar, LorentzIndex idx, double upper,
                             const QuadOptions& opts) {
  if (idx.q == kInf) throw DomainError("q = inf is handled by weak_norm");
  if (!(idx.p > 0.0) || !(idx.q > 0.0)) throw DomainError("Lorentz indices must be positive");
  if (!ustar.non_increasing()) throw DomainError("lorentz_quasinorm needs a non-increasing argument");
  return root_of(power_moment(ustar, idx.q, idx.q / idx.p, 0.0, upper, opts), idx.q);
}

double weak_norm(const OneDimFunction& ustar, double p) {
  if (!ustar.non_increasing()) throw DomainError("weak_norm needs a non-increasing argument");
  double best = 0.0;
  const double end = ustar.support_end();
  if (ustar.exact()) {
    for (const auto& s : ustar.exact()->segments()) {
      if (s.lo >= end) break;
      best = std::max(best, segment_weak_sup(s, p));
    }
  } else {
    const auto& h = ustar.hints();
    const double inv_p = 1.0 / p;
    const auto g = [&ustar, inv_p](double t) { return std::pow(t, inv_p) * ustar(t); };
    best = std::max(best, scaled_limit(h.head, p, true));
    std::vector<double> cuts;
    for (double b : ustar.breakpoints()) cuts.push_back(b);
    if (cuts.empty()) cuts.push_back(end == kInf ? 1.0 : 0.5 * end);
    const double first = cuts.front();
    best = std::max(best, panel_max(g, first * 1e-12, first));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) best = std::max(best, panel_max(g, cuts[i], cuts[i + 1]));
    if (end == kInf) {
      best = std::max(best, scaled_limit(h.tail, p, false));
      best = std::max(best, panel_max(g, cuts.back(), cuts.back() * 1e12));
    } else if (end > cuts.back()) {
      best = std::max(best, panel_max(g, cuts.back(), end));
    }
  }
  if (!std::isfinite(best)) throw DivergenceError("weak", "weak-type supremum is unbounded");
  return best;
}

std::function<double(double)> running_integral(const OneDimFunction& f) {
  if (f.exact()) {
    const auto segs = f.exact()->segments();
    auto prefix = std::make_shared<std::vector<double>>();
    auto pieces = std::make_shared<std::vector<PowerAffineSegment>>(segs.begin(), segs.end());
    const auto partial = [](const PowerAffineSegment& s, double x) {
      double v = s.d * (x - s.lo);
      if (s.c != 0.0) {
        const double e = s.alpha + 1.0;
        if (e == 0.0)
          v += s.c * std::log(x / s.lo);
        else
          v += s.c * (std::pow(x, e) - std::pow(s.lo, e)) / e;
      }
      return v;
    };
    if (segs.front().c != 0.0 && segs.front().alpha <= -1.0)
      throw DivergenceError("maximal", "f* is not integrable at 0");
    double acc = 0.0;
    for (const auto& s : segs) {
      prefix->push_back(acc);
      if (s.hi != kInf) acc += partial(s, s.hi);
    }
    const double end = f.exact()->domain_end();
    double at_inf = acc;
    if (end == kInf) {
      const auto& last = segs.back();
      if (last.c == 0.0 && last.d == 0.0)
        at_inf = acc;
      else if (last.d == 0.0 && last.alpha < -1.0)
        at_inf = acc - last.c * std::pow(last.lo, last.alpha + 1.0) / (last.alpha + 1.0);
      else
        at_inf = kInf;
    }
    return [prefix, pieces, partial, end, acc, at_inf](double x) {
      if (x <= 0.0) return 0.0;
      if (x == kInf) return at_inf;
      if (x >= end) return acc;
      auto it = std::upper_bound(pieces->begin(), pieces->end(), x,
                                 [](double v, const PowerAffineSegment& s) { return v < s.lo; });
      const auto i = static_cast<std::size_t>(std::distance(pieces->begin(), it)) - 1;
      return (*prefix)[i] + partial((*pieces)[i], x);
    };
  }
  const auto& h = f.hints();
  if (h.head.coef != 0.0 && h.head.exponent <= -1.0)
    throw DivergenceError("maximal", "f* is not integrable at 0");
  return [f](double x) {
    if (x <= 0.0) return 0.0;
    return power_moment(f, 1.0, 1.0, 0.0, x).value;
  };
}

OneDimFunction maximal_function(const OneDimFunction& fstar) {
  if (!fstar.non_increasing()) throw DomainError("maximal_function needs a non-increasing argument");
  auto F = running_integral(fstar);
  const auto& fh = fstar.hints();
  EndpointHints h;
  const double e0 = fh.head.exponent;
  h.head = {fh.head.coef / (e0 + 1.0), e0};
  std::vector<double> cuts = fstar.breakpoints();
  const double end = fstar.support_end();
  if (end != kInf) {
    cuts.push_back(end);
    const double total = F(end);
    h.tail = {total, -1.0};
    if (total == 0.0) h.support_end = end;
  } else {
    const double e = fh.tail.exponent;
    if (e > -1.0)
      h.tail = {fh.tail.coef / (e + 1.0), e};
    else
      h.tail = {F(kInf), -1.0};
  }
  return OneDimFunction([F](double t) { return F(t) / t; }, std::move(cuts), h, true);
}

QuadResult equivalent_norm(const OneDimFunction& fstar, LorentzIndex idx, double domain_measure) {
  if (!(idx.p > 1.0)) throw DomainError("equivalent norm requires p > 1");
  if (idx.q == kInf) throw DomainError("equivalent norm requires q < inf");
  if (!(domain_measure > 0.0)) throw DomainError("domain measure must be positive");
  const auto fss = maximal_function(fstar);
  return root_of(power_moment(fss, idx.q, idx.q / idx.p, 0.0, domain_measure), idx.q);
}

bool hlp_majorization(const OneDimFunction& fstar, const OneDimFunction& gstar, double domain_measure) {
  const auto F = running_integral(fstar);
  const auto G = running_integral(gstar);
  constexpr int kGrid = 512;
  for (int k = 1; k <= kGrid; ++k) {
    const double t = domain_measure * k / kGrid;
    const double a = F(t), b = G(t);
    if (a > b + 1e-10 * (1.0 + std::max(std::abs(a), std::abs(b)))) return false;
  }
  const double ft = F(domain_measure), gt = G(domain_measure);
  return std::abs(ft - gt) <= 1e-10 * std::max({std::abs(ft), std::abs(gt), 1e-300});
}

QuadResult radial_lorentz_norm(const RadialFunction& u, LorentzIndex idx, const DimensionContext& ctx,
                               const QuadOptions& opts) {
  const auto star = decreasing_rearrangement(u, ctx);
  if (idx.q == kInf) {
    const double v = weak_norm(star, idx.p);
    return {v, 4e-16 * v, false};
  }
  return lorentz_quasinorm(star, idx, kInf, opts);
}

QuadResult radial_lp_norm(const RadialFunction& u, double p, const DimensionContext& ctx,
                          const QuadOptions& opts) {
  auto r = power_moment(u, p, static_cast<double>(ctx.n), 0.0, kInf, opts);
  if (r.diverged) return r;
  r.value *= ctx.sphere_area();
  r.abs_error_estimate *= ctx.sphere_area();
  return root_of(r, p);
}

}  // namespace lorentzkit
