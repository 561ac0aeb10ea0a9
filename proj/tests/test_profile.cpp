#include "doctest.h"
#include "support.hpp"

using namespace lorentzkit;
using testing::rel_err;

TEST_CASE("eval of the standard profiles") {
  const auto lp = LorentzParams::make(3, 2.0, 2.0);
  CHECK(make_psi(lp).eval(4.0) == doctest::Approx(0.5).epsilon(1e-15));
  const auto v = make_v_eps(0.1, lp);
  CHECK(rel_err(v(0.25), std::pow(0.25, -0.4)) < 1e-14);
  CHECK(v(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.segments()[0].value_at_hi() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v(3.5) == 0.0);
  CHECK(v(100.0) == 0.0);
}

TEST_CASE("eval outside the domain") {
  const auto p = testing::cap();
  CHECK_THROWS_AS(p.eval(0.0), DomainError);
  CHECK_THROWS_AS(p.eval(-1.0), DomainError);
  const RadialProfile bounded({make_segment(0.0, 0.0, 1.0, 0.0, 2.0)});
  CHECK_THROWS_AS(bounded.eval(2.0), DomainError);
  CHECK(bounded.eval(1.999) == 1.0);
}

TEST_CASE("right-continuity at breakpoints") {
  const RadialProfile step({make_segment(0.0, 0.0, 2.0, 0.0, 1.0), make_segment(0.0, 0.0, 1.0, 1.0, kInf)});
  CHECK(step(1.0) == 1.0);
  CHECK(step(std::nextafter(1.0, 0.0)) == 2.0);
}

TEST_CASE("derivative_magnitude") {
  const auto lp = LorentzParams::make(3, 2.0, 2.0);
  const auto psi = make_psi(lp);
  CHECK(psi.derivative_magnitude(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rel_err(psi.derivative_magnitude(4.0), 0.5 * std::pow(4.0, -1.5)) < 1e-15);
  const auto v = make_v_eps(0.1, lp);
  for (double r : {1.2, 2.0, 3.4}) CHECK(v.derivative_magnitude(r) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK_THROWS_AS(v.derivative_magnitude(1.0), BreakpointError);
  CHECK(RadialProfile::indicator(2.0).derivative_magnitude(1.0) == 0.0);
}

TEST_CASE("compose_power examples") {
  const auto f = testing::pure_power(1.0, -0.5);
  CHECK(compose_power(f, 1.0) == f);
  const auto g = compose_power(f, 2.0);
  CHECK(g.segments()[0].alpha == -1.0);
  for (double r : {0.3, 1.0, 7.0}) CHECK(rel_err(g(r), 1.0 / r) < 1e-15);
  const RadialProfile two({make_segment(0.0, 0.0, 1.0, 0.0, 4.0), make_segment(0.0, 0.0, 0.0, 4.0, kInf)});
  CHECK(compose_power(two, 0.5).breakpoints().at(0) == doctest::Approx(16.0).epsilon(1e-15));
  CHECK_THROWS_AS(compose_power(f, 0.0), DomainError);
}

TEST_CASE("compose_power round trip on random profiles") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& f : make_corpus(3, 30)) {
    const double s = std::exp(2.0 * unit(rng) - 1.0);
    const auto back = compose_power(compose_power(f, s), 1.0 / s);
    for (int i = 0; i < 64; ++i) {
      const double r = std::exp(6.0 * unit(rng) - 3.0);
      const double want = f(r);
      CHECK(std::abs(back(r) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("is_decreasing") {
  const auto lp = LorentzParams::make(3, 2.0, 2.0);
  CHECK(is_decreasing(make_psi(lp)));
  for (double e : {0.01, 0.1, 0.3, 0.49}) CHECK(is_decreasing(make_v_eps(e, lp)));
  CHECK_FALSE(is_decreasing(RadialProfile({make_segment(1.0, 1.0, 0.0, 0.0, 1.0),
                                           make_segment(0.0, 0.0, 0.0, 1.0, kInf)})));
  CHECK_FALSE(is_decreasing(RadialProfile({make_segment(0.0, 0.0, 1.0, 0.0, 1.0),
                                           make_segment(0.0, 0.0, 2.0, 1.0, 2.0),
                                           make_segment(0.0, 0.0, 0.0, 2.0, kInf)})));
}

TEST_CASE("decreasing profiles evaluate monotonically") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& f : make_corpus(4, 50)) {
    REQUIRE(is_decreasing(f));
    double prev = kInf;
    for (int i = 0; i < 200; ++i) {
      const double r = 1e-3 * std::exp(0.05 * i + 0.01 * unit(rng));
      const double v = f(r);
      CHECK(v <= prev * (1.0 + 1e-13));
      prev = v;
    }
  }
}

TEST_CASE("finite differences match derivative_magnitude") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& f : make_corpus(6, 40)) {
    for (const auto& s : f.segments()) {
      if (s.is_constant()) continue;
      const double lo = s.lo, hi = std::isinf(s.hi) ? s.lo + 5.0 : s.hi;
      const double r = lo + (0.1 + 0.8 * unit(rng)) * (hi - lo);
      const double h = 1e-7 * r;
      const double fd = std::abs(f(r + h) - f(r - h)) / (2 * h);
      CHECK(rel_err(fd, f.derivative_magnitude(r)) < 1e-6);
    }
  }
}

TEST_CASE("validation names the offending segment") {
  auto message = [](std::vector<PowerAffineSegment> segs) {
    try {
      RadialProfile p(std::move(segs));
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({make_segment(0, 0, 1, 0, 1), make_segment(0, 0, 0, 1.5, kInf)}).find("segment 1") != std::string::npos);
  CHECK(message({make_segment(0, 0, 1, 0, 2), make_segment(0, 0, 0, 1, kInf)}).find("segment 1") != std::string::npos);
  CHECK(message({make_segment(0, 0, 1, 0.5, kInf)}).find("segment 0") != std::string::npos);
  CHECK(message({make_segment(1, 0.5, 0, 0, kInf)}).find("segment 0") != std::string::npos);
  CHECK(message({make_segment(1, -0.5, 1, 0, kInf)}).find("segment 0") != std::string::npos);
  CHECK(message({make_segment(0, 0, 1, 0, 1), make_segment(1, 1, -3, 1, 2), make_segment(0, 0, 0, 2, kInf)})
            .find("segment 1") != std::string::npos);
  CHECK(message({make_segment(0, 0, 1, 0, 1), make_segment(0, 0, 1, 1, kInf)}).empty());
}

TEST_CASE("derivative_profile and support") {
  const auto lp = LorentzParams::make(3, 2.0, 2.0);
  const auto v = make_v_eps(0.1, lp);
  CHECK(v.support_end() == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(make_psi(lp).support_end() == kInf);
  const auto dv = derivative_profile(v);
  for (double r : {0.2, 0.9, 1.5, 3.0, 5.0}) CHECK(dv(r) == doctest::Approx(v.derivative_magnitude(r)).epsilon(1e-14));
}
