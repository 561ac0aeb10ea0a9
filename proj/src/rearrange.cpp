#include "lorentzkit/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace lorentzkit {

double unit_ball_volume(int n) {
  const double h = 0.5 * n;
  return std::pow(std::numbers::pi, h) / std::tgamma(1.0 + h);
}

DimensionContext DimensionContext::of(int n) {
  if (n < 2) throw DomainError("dimension must be >= 2");
  return {n, unit_ball_volume(n)};
}

namespace {

struct Interval {
  double a = 0.0;
  double b = 0.0;
};

double ball_shell(double a, double b, const DimensionContext& ctx) {
  if (b == kInf) return kInf;
  return ctx.omega_n * (std::pow(b, ctx.n) - std::pow(a, ctx.n));
}

bool passes(double v, double level, bool strict) { return strict ? v > level : v >= level; }

// Radii of one monotone segment where its value exceeds (or reaches) `level`.
std::optional<Interval> segment_superlevel(const PowerAffineSegment& s, double level, bool strict) {
  if (s.is_constant()) {
    if (passes(s.d, level, strict)) return Interval{s.lo, s.hi};
    return std::nullopt;
  }
  const double va = s.value_at_lo();
  const double vb = s.value_at_hi();
  const auto crossing = [&] {
    const double r = std::pow((level - s.d) / s.c, 1.0 / s.alpha);
    return std::clamp(r, s.lo, s.hi);
  };
  if (s.is_non_increasing()) {
    if (vb >= level) return Interval{s.lo, s.hi};
    if (!passes(va, level, strict)) return std::nullopt;
    return Interval{s.lo, crossing()};
  }
  if (va >= level) return Interval{s.lo, s.hi};
  if (vb <= level) return std::nullopt;
  return Interval{crossing(), s.hi};
}

double exact_mu(const RadialProfile& p, const DimensionContext& ctx, double level, bool strict) {
  double total = 0.0;
  for (const auto& s : p.segments()) {
    if (const auto iv = segment_superlevel(s, level, strict); iv && iv->b > iv->a)
      total += ball_shell(iv->a, iv->b, ctx);
  }
  if (p.domain_end() != kInf && !strict && level <= 0.0) return kInf;
  return total;
}

double bisect_crossing(const RadialFunction& u, double lo, double hi, double level, bool strict) {
  const bool lo_in = passes(u(lo), level, strict);
  for (int i = 0; i < 100 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (passes(u(mid), level, strict) == lo_in)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Superlevel measure of a general radial function via bracketed root finding
// on a geometric sample grid of each panel.
double sampled_mu(const RadialFunction& u, const DimensionContext& ctx, double level, bool strict) {
  const auto& h = u.hints();
  double end = h.support_end;
  std::vector<double> cuts{0.0};
  for (double b : u.breakpoints()) cuts.push_back(b);
  if (end == kInf) {
    const auto& t = h.tail;
    if (t.coef > 0.0) {
      const double limit = t.exponent < 0.0 ? 0.0 : (t.exponent == 0.0 ? t.coef : kInf);
      if (level <= 0.0 || passes(limit, level, strict)) return kInf;
    }
    double cap = std::max(1.0, cuts.back() * 2.0);
    if (t.coef > 0.0 && t.exponent < 0.0)
      cap = std::max(cap, 8.0 * std::pow(level / t.coef, 1.0 / t.exponent));
    end = cap;
  }
  cuts.push_back(end);

  constexpr int kSamples = 65;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    const double x0 = a == 0.0 ? b * 1e-14 : a * (1.0 + 1e-13);
    const double x1 = b * (1.0 - 1e-13);
    const double ratio = std::pow(x1 / x0, 1.0 / (kSamples - 1));
    double prev_x = x0;
    bool prev_in = passes(u(x0), level, strict);
    double start = prev_in ? a : 0.0;
    for (int i = 1; i < kSamples; ++i) {
      const double x = i == kSamples - 1 ? x1 : x0 * std::pow(ratio, i);
      const bool in = passes(u(x), level, strict);
      if (in != prev_in) {
        const double r = bisect_crossing(u, prev_x, x, level, strict);
        if (in)
          start = r;
        else
          total += ball_shell(start, r, ctx);
      }
      prev_x = x;
      prev_in = in;
    }
    if (prev_in) total += ball_shell(start, b, ctx);
  }
  return total;
}

double mu_any(const RadialFunction& u, const DimensionContext& ctx, double level, bool strict) {
  if (level < 0.0) throw DomainError("distribution level must be >= 0");
  if (u.exact()) return exact_mu(*u.exact(), ctx, level, strict);
  return sampled_mu(u, ctx, level, strict);
}

PowerAffineSegment to_measure_axis(const PowerAffineSegment& s, const DimensionContext& ctx) {
  const double n = ctx.n;
  const auto map = [&](double r) { return r == kInf ? kInf : ctx.omega_n * std::pow(r, n); };
  return make_segment(s.c * std::pow(ctx.omega_n, -s.alpha / n), s.alpha / n, s.d, map(s.lo), map(s.hi));
}

PowerAffineSegment to_radial_axis(const PowerAffineSegment& s, const DimensionContext& ctx) {
  const double n = ctx.n;
  const auto map = [&](double t) { return t == kInf ? kInf : std::pow(t / ctx.omega_n, 1.0 / n); };
  return make_segment(s.c * std::pow(ctx.omega_n, s.alpha), s.alpha * n, s.d, map(s.lo), map(s.hi));
}

PowerAsymptote asymptote_to_measure(const PowerAsymptote& a, const DimensionContext& ctx) {
  return {a.coef * std::pow(ctx.omega_n, -a.exponent / ctx.n), a.exponent / ctx.n};
}

// Lazily evaluated u* for inputs that are not radially non-increasing.
struct LevelSearch {
  RadialFunction u;
  DimensionContext ctx;
  std::vector<double> levels;  // ascending critical levels
  std::vector<double> mu_at;   // strict distribution function at `levels`
  double support_measure = 0.0;

  double mu(double s) const { return mu_any(u, ctx, s, true); }

  double operator()(double t) const {
    if (t >= support_measure) return 0.0;
    double lo = 0.0, hi = kInf;
    // mu_at is non-increasing along ascending levels.
    const auto it = std::partition_point(mu_at.begin(), mu_at.end(), [t](double m) { return m > t; });
    const auto idx = static_cast<std::size_t>(std::distance(mu_at.begin(), it));
    if (idx > 0) lo = levels[idx - 1];
    if (idx < levels.size()) {
      hi = levels[idx];
    } else {
      hi = std::max(1.0, 2.0 * lo);
      for (int i = 0; i < 1100 && mu(hi) > t; ++i) hi *= 2.0;
      if (mu(hi) > t) return kInf;
    }
    for (int i = 0; i < 200; ++i) {
      if (hi - lo <= 4e-16 * hi) break;
      const double mid = (lo > 0.0 && hi > 4.0 * lo) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
      if (mu(mid) > t)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  }
};

OneDimFunction lazy_rearrangement(const RadialFunction& u, const DimensionContext& ctx) {
  auto search = std::make_shared<LevelSearch>(LevelSearch{u, ctx, {}, {}, 0.0});
  std::vector<double> levels{0.0};
  EndpointHints hints;
  double finite_sup = 0.0;
  bool unbounded = false;

  if (u.exact()) {
    const auto segs = u.exact()->segments();
    for (const auto& s : segs) {
      for (double v : {s.value_at_lo(), s.value_at_hi()}) {
        if (v == kInf) unbounded = true;
        if (std::isfinite(v) && v > 0.0) {
          levels.push_back(v);
          finite_sup = std::max(finite_sup, v);
        }
      }
    }
  } else {
    const double eps = 1e-12;
    for (double b : u.breakpoints()) {
      for (double x : {b * (1.0 - eps), b * (1.0 + eps)}) {
        const double v = u(x);
        if (std::isfinite(v) && v > 0.0) {
          levels.push_back(v);
          finite_sup = std::max(finite_sup, v);
        }
      }
    }
    unbounded = u.hints().head.coef > 0.0 && u.hints().head.exponent < 0.0;
    if (!unbounded && u.hints().head.coef > 0.0) {
      levels.push_back(u.hints().head.coef);
      finite_sup = std::max(finite_sup, u.hints().head.coef);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  search->support_measure = mu_any(u, ctx, 0.0, true);
  std::vector<double> t_breaks;
  for (double L : levels) {
    const double m = search->mu(L);
    search->levels.push_back(L);
    search->mu_at.push_back(m);
    if (L > 0.0) {
      t_breaks.push_back(m);
      t_breaks.push_back(mu_any(u, ctx, L, false));
    }
  }
  std::erase_if(t_breaks, [](double t) { return !std::isfinite(t) || !(t > 0.0); });

  hints.support_end = search->support_measure;
  const auto& uh = u.hints();
  if (unbounded)
    hints.head = asymptote_to_measure(uh.head, ctx);
  else
    hints.head = {finite_sup, 0.0};
  if (hints.support_end == kInf) hints.tail = asymptote_to_measure(uh.tail, ctx);

  return OneDimFunction([search](double t) { return (*search)(t); }, std::move(t_breaks), hints, true);
}

}  // namespace

double distribution_function(const RadialFunction& u, const DimensionContext& ctx, double level) {
  const double m = mu_any(u, ctx, level, true);
  if (m == kInf && level > 0.0)
    throw DivergenceError("distribution", "superlevel set has infinite measure");
  return m;
}

double distribution_function_closed(const RadialFunction& u, const DimensionContext& ctx,
                                    double level) {
  const double m = mu_any(u, ctx, level, false);
  if (m == kInf && level > 0.0)
    throw DivergenceError("distribution", "superlevel set has infinite measure");
  return m;
}

OneDimFunction decreasing_rearrangement(const RadialFunction& u, const DimensionContext& ctx) {
  if (u.non_increasing()) {
    if (u.exact()) {
      std::vector<PowerAffineSegment> segs;
      for (const auto& s : u.exact()->segments()) segs.push_back(to_measure_axis(s, ctx));
      return OneDimFunction(RadialProfile(std::move(segs)));
    }
    EndpointHints h;
    h.head = asymptote_to_measure(u.hints().head, ctx);
    h.tail = asymptote_to_measure(u.hints().tail, ctx);
    h.support_end = u.support_end() == kInf ? kInf : ctx.omega_n * std::pow(u.support_end(), ctx.n);
    std::vector<double> tb;
    for (double b : u.breakpoints()) tb.push_back(ctx.omega_n * std::pow(b, ctx.n));
    const double inv_n = 1.0 / ctx.n;
    return OneDimFunction(
        [u, ctx, inv_n](double t) { return u(std::pow(t / ctx.omega_n, inv_n)); }, std::move(tb), h,
        true);
  }
  return lazy_rearrangement(u, ctx);
}

RadialFunction symmetric_rearrangement(const RadialFunction& u, const DimensionContext& ctx) {
  const OneDimFunction star = decreasing_rearrangement(u, ctx);
  if (star.exact()) {
    std::vector<PowerAffineSegment> segs;
    for (const auto& s : star.exact()->segments()) segs.push_back(to_radial_axis(s, ctx));
    return RadialFunction(RadialProfile(std::move(segs)));
  }
  const auto& sh = star.hints();
  EndpointHints h;
  h.head = {sh.head.coef * std::pow(ctx.omega_n, sh.head.exponent), sh.head.exponent * ctx.n};
  h.tail = {sh.tail.coef * std::pow(ctx.omega_n, sh.tail.exponent), sh.tail.exponent * ctx.n};
  h.support_end = sh.support_end == kInf ? kInf : std::pow(sh.support_end / ctx.omega_n, 1.0 / ctx.n);
  std::vector<double> rb;
  for (double t : star.breakpoints()) rb.push_back(std::pow(t / ctx.omega_n, 1.0 / ctx.n));
  return RadialFunction([star, ctx](double r) { return star(ctx.omega_n * std::pow(r, ctx.n)); },
                        std::move(rb), h, true);
}

SampledFunction::SampledFunction(std::vector<double> v, double cell)
    : values(std::move(v)), cell_measure(cell) {
  if (!(cell_measure > 0.0) || !std::isfinite(cell_measure))
    throw DomainError("cell measure must be positive");
  for (double x : values)
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("sampled values must be finite and >= 0");
}

SampledFunction rearrange_sampled(const SampledFunction& f) {
  auto v = f.values;
  std::sort(v.begin(), v.end(), std::greater<>());
  return {std::move(v), f.cell_measure};
}

OneDimFunction step_function(const SampledFunction& f) {
  const auto sorted = rearrange_sampled(f);
  std::vector<PowerAffineSegment> segs;
  const double h = f.cell_measure;
  for (std::size_t k = 0; k < sorted.values.size(); ++k) {
    const double lo = h * static_cast<double>(k), hi = h * static_cast<double>(k + 1);
    if (!segs.empty() && segs.back().d == sorted.values[k])
      segs.back().hi = hi;
    else
      segs.push_back({0.0, 0.0, sorted.values[k], lo, hi});
  }
  segs.push_back({0.0, 0.0, 0.0, segs.empty() ? 0.0 : segs.back().hi, kInf});
  return OneDimFunction(RadialProfile(std::move(segs)));
}

void write_csv(std::ostream& os, const SampledFunction& f) {
  const auto old = os.precision(17);
  os << "# cell_measure=" << f.cell_measure << "\nvalue\n";
  for (double v : f.values) os << v << '\n';
  os.precision(old);
}

SampledFunction read_sampled_csv(std::istream& is) {
  std::string line;
  double cell = -1.0;
  bool header = false;
  std::vector<double> values;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# cell_measure=", 0) == 0) {
      cell = std::stod(line.substr(15));
      continue;
    }
    if (!header) {
      if (line != "value") throw DomainError("expected header 'value'");
      header = true;
      continue;
    }
    values.push_back(std::stod(line));
  }
  if (cell < 0.0) throw DomainError("missing cell_measure line");
  return {std::move(values), cell};
}

}  // namespace lorentzkit
