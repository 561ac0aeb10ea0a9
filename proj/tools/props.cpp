#include "props.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lorentzkit/corpus.hpp"
#include "lorentzkit/extremals.hpp"
#include "lorentzkit/transforms.hpp"

namespace lorentzkit::cli {

namespace {

std::string describe(std::size_t failures, std::size_t total, double worst) {
  std::ostringstream os;
  os.precision(6);
  os << failures << "/" << total << " failures; worst " << worst;
  return os.str();
}

InvariantResult sharp_constant_forms() {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n)
    for (double p : {1.0, 2.0, std::min(3.0, n - 1.0)}) {
      if (!(p < n)) continue;
      const double a = sharp_constant(LorentzParams::make(n, p, 2.0));
      worst = std::max(worst, std::abs(a - sharp_constant_gamma_form(n, p)) / a);
    }
  return {"sharp_constant_forms", worst <= 1e-14, describe(worst <= 1e-14 ? 0 : 1, 1, worst)};
}

InvariantResult psi_equality() {
  double worst = 0.0;
  for (auto [n, p] : {std::pair{3, 2.0}, {4, 2.0}, {5, 3.0}, {2, 1.0}}) {
    const auto lp = LorentzParams::make(n, p, kInf);
    worst = std::max(worst, std::abs(verify_embedding(make_psi(lp), lp).margin));
  }
  return {"psi_equality", worst <= 1e-8, describe(worst <= 1e-8 ? 0 : 1, 4, worst)};
}

InvariantResult embedding_corpus(const std::vector<RadialProfile>& corpus) {
  std::size_t fails = 0, total = 0;
  double worst = kInf;
  for (auto [n, p, q] : {std::tuple{3, 2.0, 2.0}, {3, 2.0, 4.0}, {3, 2.0, kInf}, {4, 2.0, 3.0},
                         {5, 3.0, 5.0}}) {
    const auto lp = LorentzParams::make(n, p, q);
    for (const auto& u : corpus) {
      ++total;
      try {
        const auto r = verify_embedding(u, lp);
        worst = std::min(worst, r.margin);
        if (!r.holds) ++fails;
      } catch (const std::exception&) {
        ++fails;
      }
    }
  }
  return {"embedding_corpus", fails == 0, describe(fails, total, worst)};
}

InvariantResult hardy_corpus(const std::vector<RadialProfile>& corpus) {
  std::size_t fails = 0, total = 0;
  double worst = 0.0;
  for (auto [n, p] : {std::pair{3, 2.0}, {4, 2.0}, {5, 3.0}}) {
    const auto lp = LorentzParams::make(n, p, kInf);
    for (const auto& u : corpus) {
      if (!std::isfinite(u.support_end())) continue;
      ++total;
      try {
        const auto h = verify_hardy(u, lp);
        const auto e = verify_embedding(u, lp);
        worst = std::max(worst, h.ratio);
        if (!h.holds || !e.holds) ++fails;
      } catch (const std::exception&) {
        ++fails;
      }
    }
  }
  return {"hardy_corpus", fails == 0, describe(fails, total, worst)};
}

InvariantResult hardy_chain(std::uint64_t seed, std::size_t count) {
  const auto corpus = unit_support(make_corpus(seed, count, lipschitz_compact_options()));
  const auto lp = LorentzParams::make(3, 2.0, 2.0);
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::uniform_real_distribution<double> rho(1e-3, 1.0 - 1e-3);
  std::size_t fails = 0;
  double worst = 0.0;
  for (const auto& u : corpus) {
    for (int i = 0; i < 20; ++i) {
      const auto b = pointwise_hardy_bound(u, lp, rho(rng));
      if (b.lhs > b.rhs * (1.0 + 1e-12)) ++fails;
    }
    const auto v = hardy_auxiliary(u, lp);
    const double energy = gradient_energy_tail(u, lp.p, lp.n, 0.0);
    const double at_one = v(1.0 - 1e-12);
    const auto slope = decreasing_rearrangement(hardy_auxiliary_slope(u, lp), lp.dimension());
    const double sup = weak_norm(slope, lp.p) * std::pow(lp.omega_n(), -1.0 / lp.p);
    const double err = std::abs(sup - energy) / energy;
    worst = std::max({worst, std::abs(at_one), err});
    if (std::abs(at_one) > 1e-8 || err > 1e-8) ++fails;
  }
  return {"hardy_chain", fails == 0, describe(fails, corpus.size(), worst)};
}

InvariantResult sampled_axioms(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::size_t fails = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto f = random_sampled(rng);
    const auto fs = rearrange_sampled(f);
    double s0 = 0.0, s1 = 0.0, q0 = 0.0, q1 = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      s0 += f.values[k];
      s1 += fs.values[k];
      q0 += f.values[k] * f.values[k];
      q1 += fs.values[k] * fs.values[k];
    }
    if (std::abs(s0 - s1) > 1e-12 * (1 + s0) || std::abs(q0 - q1) > 1e-12 * (1 + q0)) ++fails;
    if (!std::is_sorted(fs.values.rbegin(), fs.values.rend())) ++fails;
  }
  return {"sampled_axioms", fails == 0, describe(fails, count, 0.0)};
}

InvariantResult dilation_invariance(const std::vector<RadialProfile>& corpus) {
  std::size_t fails = 0;
  double worst = 0.0;
  const std::size_t take = std::min<std::size_t>(10, corpus.size());
  for (double q : {4.0, kInf}) {
    const auto lp = LorentzParams::make(3, 2.0, q);
    for (std::size_t i = 0; i < take; ++i) {
      const double base = verify_embedding(corpus[i], lp).ratio;
      for (double lambda : {0.1, 10.0}) {
        const double r = verify_embedding(dilate(corpus[i], lambda), lp).ratio;
        const double err = std::abs(r - base) / base;
        worst = std::max(worst, err);
        if (err > 1e-9) ++fails;
      }
    }
  }
  return {"dilation_invariance", fails == 0, describe(fails, 4 * take, worst)};
}

InvariantResult sweep_monotone() {
  std::size_t fails = 0;
  const std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  for (auto [n, p, q] : {std::tuple{3, 2.0, 4.0}, {4, 2.0, 3.0}}) {
    const auto rows = epsilon_sweep(LorentzParams::make(n, p, q), eps);
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].rel_err < rows[i - 1].rel_err)) ++fails;
    if (!(rows.back().rel_err <= 2e-3)) ++fails;
  }
  return {"sweep_monotone", fails == 0, describe(fails, 2, 0.0)};
}

}  // namespace

std::vector<InvariantResult> run_invariants(std::uint64_t seed, std::size_t count) {
  const auto corpus = make_corpus(seed, count);
  std::vector<InvariantResult> out;
  out.push_back(sharp_constant_forms());
  out.push_back(psi_equality());
  out.push_back(embedding_corpus(corpus));
  out.push_back(hardy_corpus(corpus));
  out.push_back(hardy_chain(seed + 1, std::max<std::size_t>(count / 4, 1)));
  out.push_back(sampled_axioms(seed + 2, 500));
  out.push_back(dilation_invariance(corpus));
  out.push_back(sweep_monotone());
  return out;
}

}  // namespace lorentzkit::cli
