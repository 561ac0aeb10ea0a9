#include "lorentzkit/corpus.hpp"

#include <cmath>

#include "lorentzkit/transforms.hpp"

namespace lorentzkit {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Segment through (lo, a) and (hi, b) with shape r^alpha.
PowerAffineSegment fit(double alpha, double lo, double hi, double a, double b) {
  const double c = (b - a) / (std::pow(hi, alpha) - std::pow(lo, alpha));
  const double d = a - c * std::pow(lo, alpha);
  return make_segment(c, alpha, d, lo, hi);
}

double interior_exponent(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return 1.0;
    case 1: return uniform(rng, 0.3, 3.0);
    default: return -uniform(rng, 0.3, 2.5);
  }
}

enum class Head { singular, flat, lipschitz, holder };

}  // namespace

CorpusOptions lipschitz_compact_options() {
  CorpusOptions o;
  o.allow_singular_head = false;
  o.allow_holder_head = false;
  o.allow_power_tail = false;
  return o;
}

RadialProfile random_profile(std::mt19937_64& rng, const CorpusOptions& opts) {
  const int k = std::uniform_int_distribution<int>(1, opts.max_segments)(rng);
  const bool power_tail = opts.allow_power_tail && std::bernoulli_distribution(0.3)(rng);
  const bool compact = !power_tail;

  std::vector<Head> heads{Head::lipschitz};
  if (opts.allow_holder_head) heads.push_back(Head::holder);
  if (k > 1 || !compact) {
    heads.push_back(Head::flat);
    if (opts.allow_singular_head) heads.push_back(Head::singular);
  }
  const Head head = heads[std::uniform_int_distribution<std::size_t>(0, heads.size() - 1)(rng)];

  std::vector<double> r(k + 1, 0.0), y(k + 1, 0.0);
  r[1] = uniform(rng, 0.2, 1.2);
  for (int i = 2; i <= k; ++i) r[i] = r[i - 1] + uniform(rng, 0.15, 1.5);
  y[1] = uniform(rng, 0.5, 2.0);
  for (int i = 2; i <= k; ++i) y[i] = y[i - 1] * uniform(rng, 0.2, 0.85);
  if (compact) y[k] = 0.0;
  y[0] = y[1] * uniform(rng, 1.1, 3.0) + (y[1] == 0.0 ? uniform(rng, 0.5, 2.0) : 0.0);

  std::vector<PowerAffineSegment> segs;
  switch (head) {
    case Head::singular: {
      const double beta = uniform(rng, 0.05, opts.max_head_exponent);
      segs.push_back(make_segment(y[1] * std::pow(r[1], beta), -beta, 0.0, 0.0, r[1]));
      break;
    }
    case Head::flat: segs.push_back(make_segment(0.0, 0.0, y[1], 0.0, r[1])); break;
    case Head::lipschitz: segs.push_back(fit(uniform(rng, 1.0, 3.0), 0.0, r[1], y[0], y[1])); break;
    case Head::holder: segs.push_back(fit(uniform(rng, 0.3, 0.9), 0.0, r[1], y[0], y[1])); break;
  }
  for (int i = 2; i <= k; ++i) segs.push_back(fit(interior_exponent(rng), r[i - 1], r[i], y[i - 1], y[i]));
  if (compact) {
    segs.push_back(make_segment(0.0, 0.0, 0.0, r[k], kInf));
  } else {
    const double m = uniform(rng, opts.min_tail_exponent, opts.min_tail_exponent + 1.5);
    segs.push_back(make_segment(y[k] * std::pow(r[k], m), -m, 0.0, r[k], kInf));
  }
  return RadialProfile(std::move(segs));
}

std::vector<RadialProfile> make_corpus(std::uint64_t seed, std::size_t count,
                                       const CorpusOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<RadialProfile> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_profile(rng, opts));
  return out;
}

std::vector<RadialProfile> unit_support(const std::vector<RadialProfile>& corpus) {
  std::vector<RadialProfile> out;
  for (const auto& u : corpus) {
    const double s = u.support_end();
    if (std::isfinite(s) && s > 0.0) out.push_back(dilate(u, s));
  }
  return out;
}

SampledFunction random_sampled(std::mt19937_64& rng, std::size_t max_cells) {
  const auto cells = std::uniform_int_distribution<std::size_t>(1, max_cells)(rng);
  std::vector<double> v(cells);
  for (auto& x : v) {
    const double u = uniform(rng, 0.0, 1.0);
    if (u < 0.2) x = 0.0;
    else if (u < 0.5) x = 0.25 * std::uniform_int_distribution<int>(1, 8)(rng);
    else x = uniform(rng, 0.0, 3.0);
  }
  return SampledFunction(std::move(v), uniform(rng, 0.05, 2.0));
}

}  // namespace lorentzkit
