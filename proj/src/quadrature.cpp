#include "lorentzkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace lorentzkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

boost::math::quadrature::tanh_sinh<double>& finite_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
  return rule;
}

boost::math::quadrature::exp_sinh<double>& half_line_rule() {
  thread_local boost::math::quadrature::exp_sinh<double> rule(9);
  return rule;
}

// h(x) guarded against evaluation at under/overflowed abscissae, where the
// pre-checked integrability makes the contribution negligible.
double guarded(const std::function<double(double)>& h, double x) {
  if (!(x > 0.0) || x == kInf) return 0.0;
  const double v = h(x);
  return std::isfinite(v) ? v : 0.0;
}

QuadResult finite_panel(const std::function<double(double)>& h, double a, double b,
                        const QuadOptions& opts) {
  double err = 0.0, l1 = 0.0;
  const double la = std::log(a), lb = std::log(b);
  if (lb - la < 1e-6) {
    const double width = lb - la;
    const double f0 = guarded(h, a), fm = guarded(h, std::exp(0.5 * (la + lb))), f1 = guarded(h, b);
    const double simpson = width * (f0 + 4 * fm + f1) / 6;
    return {simpson, std::abs(simpson - width * fm) + 4 * kEps * std::abs(simpson), false};
  }
  const double v = finite_rule().integrate(
      [&](double s) { return guarded(h, std::exp(s)); }, la, lb, opts.tolerance, &err, &l1);
  return {v, err + 4 * kEps * l1, false};
}

QuadResult head_panel(const std::function<double(double)>& h, double b, const QuadOptions& opts) {
  double err = 0.0, l1 = 0.0;
  const double v = half_line_rule().integrate(
      [&](double x) { return guarded(h, b * std::exp(-x)); }, opts.tolerance, &err, &l1);
  return {v, err + 4 * kEps * l1, false};
}

QuadResult tail_panel(const std::function<double(double)>& h, double a, const QuadOptions& opts) {
  double err = 0.0, l1 = 0.0;
  const double v = half_line_rule().integrate(
      [&](double x) { return guarded(h, a * std::exp(x)); }, opts.tolerance, &err, &l1);
  return {v, err + 4 * kEps * l1, false};
}

// x^w * v^q evaluated in log space.
double weighted_power(double v, double q, double x, double w) {
  if (v <= 0.0) return 0.0;
  return std::exp(q * std::log(v) + w * std::log(x));
}

}  // namespace

QuadResult integrate_dlog(const std::function<double(double)>& h, double a, double b,
                          const QuadOptions& opts) {
  if (!(a >= 0.0) || !(b > a)) return {};
  if (a == 0.0 && b == kInf) {
    auto r = head_panel(h, 1.0, opts);
    r += tail_panel(h, 1.0, opts);
    return r;
  }
  if (a == 0.0) return head_panel(h, b, opts);
  if (b == kInf) return tail_panel(h, a, opts);
  return finite_panel(h, a, b, opts);
}

QuadResult power_dlog(double coef, double kappa, double a, double b) {
  if (coef == 0.0 || !(b > a)) return {};
  if ((a == 0.0 && kappa <= 0.0) || (b == kInf && kappa >= 0.0)) return diverged_result();
  double v = 0.0;
  if (a == 0.0) {
    v = std::pow(b, kappa) / kappa;
  } else if (b == kInf) {
    v = -std::pow(a, kappa) / kappa;
  } else if (kappa == 0.0) {
    v = std::log(b / a);
  } else {
    // a^kappa * (exp(kappa ln(b/a)) - 1) / kappa, stable for small kappa.
    v = std::pow(a, kappa) * std::expm1(kappa * std::log(b / a)) / kappa;
  }
  v *= coef;
  return {v, 8 * kEps * std::abs(v), false};
}

template <class D>
QuadResult power_moment(const PiecewiseFunction<D>& f, double q, double w, double a, double b,
                        const QuadOptions& opts) {
  const double upper = std::min(b, f.support_end());
  QuadResult total;
  if (!(upper > a)) return total;

  if (f.exact()) {
    for (const auto& s : f.exact()->segments()) {
      const double lo = std::max(a, s.lo), hi = std::min(upper, s.hi);
      if (!(hi > lo)) continue;
      if (s.is_constant()) {
        if (s.d > 0.0) total += power_dlog(std::pow(s.d, q), w, lo, hi);
      } else if (s.is_pure_power()) {
        total += power_dlog(std::pow(s.c, q), q * s.alpha + w, lo, hi);
      } else {
        if (lo == 0.0) {
          const auto h = head_asymptote(s);
          if (h.coef != 0.0 && q * h.exponent + w <= 0.0) return diverged_result();
        }
        total += integrate_dlog(
            [&s, q, w](double x) { return weighted_power(s.value(x), q, x, w); }, lo, hi, opts);
      }
      if (total.diverged) return diverged_result();
    }
    return total;
  }

  const auto& hints = f.hints();
  if (a == 0.0 && hints.head.coef != 0.0 && q * hints.head.exponent + w <= 0.0)
    return diverged_result();
  if (upper == kInf && hints.tail.coef != 0.0 && q * hints.tail.exponent + w >= 0.0)
    return diverged_result();

  std::vector<double> cuts{a};
  for (double x : f.breakpoints())
    if (x > a && x < upper) cuts.push_back(x);
  cuts.push_back(upper);
  if (a == 0.0 && upper == kInf && cuts.size() == 2) cuts.insert(cuts.begin() + 1, 1.0);

  const auto h = [&f, q, w](double x) { return weighted_power(f(x), q, x, w); };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate_dlog(h, cuts[i], cuts[i + 1], opts);
  return total;
}

template QuadResult power_moment(const PiecewiseFunction<RadialDomain>&, double, double, double,
                                 double, const QuadOptions&);
template QuadResult power_moment(const PiecewiseFunction<MeasureDomain>&, double, double, double,
                                 double, const QuadOptions&);

QuadResult root_of(const QuadResult& integral, double q) {
  if (integral.diverged) return diverged_result();
  const double v = std::pow(std::max(integral.value, 0.0), 1.0 / q);
  const double e = integral.value > 0.0 ? v * integral.abs_error_estimate / (q * integral.value) : 0.0;
  return {v, e, false};
}

}  // namespace lorentzkit
