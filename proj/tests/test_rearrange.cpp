#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace lorentzkit;
using testing::rel_err;

namespace {

// 0 on [0,1), rises to 1 at r = 2, back to 0 at r = 3.
RadialProfile annulus_bump() {
  return RadialProfile({make_segment(0, 0, 0, 0, 1), make_segment(1, 1, -1, 1, 2),
                        make_segment(-1, 1, 3, 2, 3), make_segment(0, 0, 0, 3, kInf)});
}

SampledFunction scaled(const SampledFunction& f, double k) {
  auto v = f.values;
  for (auto& x : v) x *= k;
  return SampledFunction(v, f.cell_measure);
}

}  // namespace

TEST_CASE("unit ball volume") {
  CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(unit_ball_volume(3) == doctest::Approx(4 * M_PI / 3).epsilon(1e-15));
  CHECK(unit_ball_volume(4) == doctest::Approx(M_PI * M_PI / 2).epsilon(1e-15));
  const auto ctx = DimensionContext::of(5);
  CHECK(ctx.sphere_area() == doctest::Approx(5 * 8 * M_PI * M_PI / 15).epsilon(1e-14));
  CHECK_THROWS_AS(DimensionContext::of(1), DomainError);
}

TEST_CASE("distribution function examples") {
  const auto ctx = DimensionContext::of(3);
  CHECK(distribution_function(RadialProfile::indicator(1.0), ctx, 0.5) == doctest::Approx(testing::omega3()).epsilon(1e-14));
  const auto psi = testing::pure_power(1.0, -0.5);
  for (double t : {0.1, 1.0, 3.0}) CHECK(rel_err(distribution_function(psi, ctx, t), testing::omega3() * std::pow(t, -6.0)) < 1e-13);
  CHECK(distribution_function(testing::cap(), ctx, 1.5) == 0.0);
  CHECK_THROWS_AS(distribution_function(testing::cap(), ctx, -1.0), DomainError);
  const RadialProfile flat({make_segment(0, 0, 1, 0, kInf)});
  CHECK_THROWS_AS(distribution_function(flat, ctx, 0.5), DivergenceError);
}

TEST_CASE("distribution function of a non-monotone profile") {
  const auto ctx = DimensionContext::of(3);
  const auto bump = annulus_bump();
  for (double s : {0.1, 0.5, 0.9}) {
    const double want = testing::omega3() * (std::pow(3 - s, 3) - std::pow(1 + s, 3));
    CHECK(rel_err(distribution_function(bump, ctx, s), want) < 1e-12);
  }
}

TEST_CASE("decreasing rearrangement examples") {
  const auto ctx = DimensionContext::of(3);
  const auto ind = decreasing_rearrangement(RadialProfile::indicator(1.0), ctx);
  CHECK(ind(0.5 * testing::omega3()) == 1.0);
  CHECK(ind(1.01 * testing::omega3()) == 0.0);

  const auto psi_star = decreasing_rearrangement(testing::pure_power(1.0, -0.5), ctx);
  REQUIRE(psi_star.exact());
  for (double t : {1e-3, 0.7, 40.0})
    CHECK(rel_err(psi_star(t), std::pow(testing::omega3(), 1.0 / 6) * std::pow(t, -1.0 / 6)) < 1e-14);

  for (int n : {2, 4, 7}) {
    const auto c = DimensionContext::of(n);
    const double beta = 0.3;
    const auto s = decreasing_rearrangement(testing::pure_power(2.0, -beta), c);
    for (double t : {0.01, 1.0, 9.0}) CHECK(rel_err(s(t), 2.0 * std::pow(t / c.omega_n, -beta / n)) < 1e-13);
  }
}

TEST_CASE("lazy rearrangement of a non-monotone profile") {
  const auto ctx = DimensionContext::of(3);
  const auto star = decreasing_rearrangement(annulus_bump(), ctx);
  CHECK_FALSE(star.exact());
  for (double s : {0.05, 0.3, 0.6, 0.95}) {
    const double t = testing::omega3() * (std::pow(3 - s, 3) - std::pow(1 + s, 3));
    CHECK(std::abs(star(t * (1 - 1e-9)) - s) < 1e-8);
  }
  CHECK(star(testing::omega3() * 27.0) == 0.0);
}

TEST_CASE("symmetric rearrangement") {
  const auto ctx = DimensionContext::of(3);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& u : make_corpus(8, 10)) {
    const auto sharp = symmetric_rearrangement(u, ctx);
    for (int i = 0; i < 64; ++i) {
      const double r = std::exp(6 * unit(rng) - 3);
      CHECK(std::abs(sharp(r) - u(r)) <= 1e-12 * std::max(1.0, u(r)));
    }
  }
  const auto bump = annulus_bump();
  const auto sharp = symmetric_rearrangement(bump, ctx);
  for (int i = 1; i <= 20; ++i) {
    const double s = i / 21.0;
    const double a = distribution_function(bump, ctx, s);
    CHECK(rel_err(distribution_function(sharp, ctx, s), a) < 1e-7);
  }
  const auto z = symmetric_rearrangement(RadialProfile::zero(), ctx);
  for (double r : {0.1, 1.0, 10.0}) CHECK(z(r) == 0.0);
}

TEST_CASE("rearrange_sampled examples") {
  const auto f = rearrange_sampled(SampledFunction({0, 3, 1, 2}, 0.5));
  CHECK(f.values == std::vector<double>{3, 2, 1, 0});
  CHECK(f.cell_measure == 0.5);
  CHECK(rearrange_sampled(f).values == f.values);
  CHECK_THROWS_AS(SampledFunction({1, -1}, 1.0), DomainError);
  CHECK_THROWS_AS(SampledFunction({1}, 0.0), DomainError);
}

TEST_CASE("rearrangement axioms on random sampled functions") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_sampled(rng);
    const auto fs = rearrange_sampled(f);
    const std::size_t m = f.values.size();

    for (double lambda : {-2.0, 0.5, 3.0}) {
      const auto lhs = rearrange_sampled(scaled(f, std::abs(lambda)));
      for (std::size_t k = 0; k < m; ++k) CHECK(lhs.values[k] == doctest::Approx(std::abs(lambda) * fs.values[k]).epsilon(1e-15));
    }

    std::vector<double> gv(m), hv(m);
    for (std::size_t k = 0; k < m; ++k) {
      gv[k] = 3 * unit(rng);
      hv[k] = f.values[k] + unit(rng);
    }
    const SampledFunction g(gv, f.cell_measure);
    const auto gs = rearrange_sampled(g);
    std::vector<double> sum(m);
    for (std::size_t k = 0; k < m; ++k) sum[k] = f.values[k] + gv[k];
    const auto ss = rearrange_sampled(SampledFunction(sum, f.cell_measure));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; i + j < m; ++j) CHECK(ss.values[i + j] <= fs.values[i] + gs.values[j] + 1e-12);

    const auto hs = rearrange_sampled(SampledFunction(hv, f.cell_measure));
    for (std::size_t k = 0; k < m; ++k) CHECK(fs.values[k] <= hs.values[k]);

    for (auto a : {+[](double s) { return s; }, +[](double s) { return s * s; }, +[](double s) { return std::sqrt(s); }}) {
      double x = 0, y = 0;
      for (std::size_t k = 0; k < m; ++k) {
        x += a(f.values[k]) * f.cell_measure;
        y += a(fs.values[k]) * f.cell_measure;
      }
      CHECK(std::abs(x - y) <= 1e-12 * (1 + x));
    }

    double plain = 0, sorted = 0;
    for (std::size_t k = 0; k < m; ++k) {
      plain += f.values[k] * gv[k];
      sorted += fs.values[k] * gs.values[k];
    }
    CHECK(plain <= sorted + 1e-12);

    double lip = 0, lip_star = 0;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      lip = std::max(lip, std::abs(f.values[k + 1] - f.values[k]));
      lip_star = std::max(lip_star, std::abs(fs.values[k + 1] - fs.values[k]));
    }
    CHECK(lip_star <= lip);
  }
}

TEST_CASE("continuous and discrete rearrangements agree") {
  const auto ctx = DimensionContext::of(3);
  const double window = testing::omega3() * 27.0;
  const std::size_t cells = 20000;
  const double h = window / cells;
  for (const auto& u : {annulus_bump(), testing::cap()}) {
    std::vector<double> v(cells);
    for (std::size_t k = 0; k < cells; ++k) v[k] = u(std::cbrt((k + 0.5) * h / ctx.omega_n));
    const auto disc = rearrange_sampled(SampledFunction(v, h));
    const auto cont = decreasing_rearrangement(u, ctx);
    double diff = 0, mass = 0;
    for (std::size_t k = 0; k < cells; ++k) {
      const double c = cont((k + 0.5) * h);
      diff += std::abs(c - disc.values[k]) * h;
      mass += c * h;
    }
    CHECK(diff / mass < 1e-3);
  }
}

TEST_CASE("sampled CSV round trip") {
  const SampledFunction f({0.1, 1.0 / 3.0, 0.0, 2.5e-17}, 0.125);
  std::stringstream ss;
  write_csv(ss, f);
  const auto g = read_sampled_csv(ss);
  CHECK(g.values == f.values);
  CHECK(g.cell_measure == f.cell_measure);
  std::stringstream bad("value\n1\n");
  CHECK_THROWS_AS(read_sampled_csv(bad), DomainError);
}

TEST_CASE("step function of sampled data") {
  const auto f = step_function(rearrange_sampled(SampledFunction({1, 3, 3, 0}, 0.5)));
  CHECK(f(0.25) == 3.0);
  CHECK(f(0.75) == 3.0);
  CHECK(f(1.25) == 1.0);
  CHECK(f(1.75) == 0.0);
  CHECK(f(10.0) == 0.0);
}
