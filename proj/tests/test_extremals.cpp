#include "doctest.h"
#include "support.hpp"

using namespace lorentzkit;
using testing::rel_err;

namespace {
const LorentzParams k324 = LorentzParams::make(3, 2, 4);
}

TEST_CASE("v_eps shape") {
  const auto v = make_v_eps(0.1, k324);
  CHECK(v.segments()[0].value_at_hi() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.support_end() == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(v.derivative_magnitude(2.0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(is_decreasing(v));
  CHECK_THROWS_AS(make_v_eps(0.0, k324), DomainError);
  CHECK_THROWS_AS(make_v_eps(0.5, k324), DomainError);
  CHECK_THROWS_AS(make_v_eps(-0.1, k324), DomainError);
}

TEST_CASE("closed-form gradient norm against quadrature") {
  for (auto [n, p, q, eps] : {std::tuple{4, 2.0, 3.0, 0.2}, {3, 2.0, 4.0, 0.1}, {5, 3.0, 2.5, 0.3}, {3, 1.5, 7.0, 0.6}}) {
    const auto lp = LorentzParams::make(n, p, q);
    const auto g = radial_lorentz_norm(derivative_profile(make_v_eps(eps, lp)), gradient_index(lp), lp.dimension());
    CHECK(rel_err(grad_norm_closed_form(eps, lp), std::pow(g.value, q)) < 1e-7);
  }
}

TEST_CASE("closed-form gradient norm at the edge of the range") {
  // With gap = (n-p)/p - eps -> 0 the cap radius grows like 1/gap, so the value
  // behaves like omega^(q/p) (p/q) gap^(-q(n-p)/p).
  const double w = 4 * M_PI / 3;
  double prev_err = kInf;
  for (double gap : {1e-2, 1e-3, 1e-4}) {
    const double scaled = grad_norm_closed_form(0.5 - gap, k324) * std::pow(gap, 2.0);
    const double err = rel_err(scaled, w * w * 0.5);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-3);
  CHECK_THROWS_AS(grad_norm_closed_form(0.1, LorentzParams::make(3, 2, kInf)), DomainError);
}

TEST_CASE("family point") {
  const auto pt = make_family_point(0.1, k324);
  CHECK(pt.grad_norm_q == grad_norm_closed_form(0.1, k324));
  const auto t = radial_lorentz_norm(pt.profile, target_index(k324), k324.dimension());
  CHECK(rel_err(pt.target_norm_q, std::pow(t.value, 4.0)) < 1e-12);
  CHECK(rel_err(pt.ratio, 1.0 / verify_embedding(pt.profile, k324).ratio) < 1e-7);
}

TEST_CASE("epsilon sweep") {
  const double limit = std::cbrt(4 * M_PI / 3) * 0.5;
  CHECK(rel_err(sweep_limit(k324), limit) < 1e-15);
  CHECK(sweep_limit(k324) == doctest::Approx(0.806004).epsilon(1e-5));
  CHECK(rel_err(sweep_limit(k324), 1 / sharp_constant(k324)) < 1e-12);
  const std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const auto rows = epsilon_sweep(k324, eps);
  REQUIRE(rows.size() == eps.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].epsilon == eps[i]);
    CHECK(rows[i].ratio > rows[i].limit);
    if (i) CHECK(rows[i].rel_err < rows[i - 1].rel_err);
  }
  CHECK(rows.back().rel_err <= 2e-3);
  CHECK_THROWS_AS(epsilon_sweep(LorentzParams::make(3, 2, kInf), eps), DomainError);
}

TEST_CASE("psi closed-form weak norms") {
  const auto lp = LorentzParams::make(3, 2, kInf);
  const auto w = psi_weak_norms_closed_form(lp);
  CHECK(w.target == doctest::Approx(1.26965).epsilon(1e-5));
  CHECK(w.gradient == doctest::Approx(1.02333).epsilon(1e-5));
  const auto r = psi_closed_form_report(lp);
  CHECK(std::abs(r.margin) < 1e-12);
  for (auto [n, p] : {std::pair{4, 2.0}, {5, 3.0}, {2, 1.0}}) {
    const auto l = LorentzParams::make(n, p, kInf);
    CHECK(std::abs(psi_closed_form_report(l).margin) < 1e-12);
    CHECK(std::abs(verify_embedding(make_psi(l), l).margin) < 1e-8);
  }
}

TEST_CASE("other q = inf maximizers") {
  const auto lp = LorentzParams::make(3, 2, kInf);
  for (double delta : {0.1, 0.5, 2.0}) CHECK(std::abs(verify_embedding(shifted_psi(lp, delta), lp).margin) < 1e-8);
  for (double lambda : {0.1, 10.0}) CHECK(std::abs(verify_embedding(dilate(make_psi(lp), lambda), lp).margin) < 1e-8);
}

TEST_CASE("non-attainment evidence") {
  const std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
  const auto rows = non_attainment_evidence(k324, v_eps_family(k324, eps));
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].strict);
    if (i) CHECK(rows[i].margin < rows[i - 1].margin);
  }
  std::vector<FamilyMember> caps;
  for (double r : {1.5, 4.0, 30.0, 300.0}) caps.push_back({"cap", capped_psi(k324, r)});
  for (const auto& row : non_attainment_evidence(k324, caps)) CHECK(row.strict);
  const auto base = make_v_eps(0.1, k324);
  std::vector<FamilyMember> dil{{"a", dilate(base, 0.3)}, {"b", base}, {"c", dilate(base, 7.0)}};
  const auto d = non_attainment_evidence(k324, dil);
  CHECK(rel_err(d[0].margin, d[1].margin) < 1e-9);
  CHECK(rel_err(d[2].margin, d[1].margin) < 1e-9);
}

TEST_CASE("capped and shifted psi profiles") {
  const auto lp = LorentzParams::make(3, 2, 4);
  const auto c = capped_psi(lp, 4.0);
  CHECK(c(0.1) == doctest::Approx(2.0 - 0.5));
  CHECK(c(1.0) == doctest::Approx(0.5));
  CHECK(c(4.0) == 0.0);
  CHECK(is_decreasing(c));
  const auto s = shifted_psi(lp, 0.5);
  CHECK(s.support_end() == doctest::Approx(4.0));
  CHECK_THROWS_AS(capped_psi(lp, 1.0), DomainError);
  CHECK_THROWS_AS(shifted_psi(lp, 0.0), DomainError);
}
