#pragma once

#include <span>
#include <string>
#include <vector>

#include "lorentzkit/inequalities.hpp"

namespace lorentzkit {

/// Two-branch profile: r^(-a+eps) on (0,1), 1 - (a-eps)(r-1) on [1, 1 + 1/(a-eps)),
/// zero after, with a = (n-p)/p. Throws DomainError unless 0 < eps < a.
RadialProfile make_v_eps(double epsilon, const LorentzParams& params);

/// ||grad v_eps||_{p,q}^q in closed form:
/// n omega^(q/p) (a-eps)^q (1/q) [1/eps + (p/n)(R^(nq/p) - 1)], R = 1 + 1/(a-eps).
double grad_norm_closed_form(double epsilon, const LorentzParams& params);

struct EpsilonFamilyPoint {
  double epsilon = 0.0;
  LorentzParams params;
  RadialProfile profile = RadialProfile::zero();
  double grad_norm_q = 0.0;    ///< closed form
  double target_norm_q = 0.0;  ///< quadrature
  double ratio = 0.0;          ///< ||grad v||_{p,q} / ||v||_{p*,q}
  double quad_error = 0.0;     ///< relative error estimate of the ratio
};

EpsilonFamilyPoint make_family_point(double epsilon, const LorentzParams& params);

struct SweepRow {
  double epsilon = 0.0;
  double ratio = 0.0;
  double limit = 0.0;
  double rel_err = 0.0;
};

/// omega_n^(1/n) (n-p)/p.
double sweep_limit(const LorentzParams& params);

/// Rows in input order; evaluated concurrently. Needs q < inf.
std::vector<SweepRow> epsilon_sweep(const LorentzParams& params, std::span<const double> epsilons);

/// 1e-1, 1e-2, ..., 1e-6.
std::vector<double> default_epsilons();

/// r^(-(n-p)/p) on (0, inf).
RadialProfile make_psi(const LorentzParams& params);

struct PsiWeakNorms {
  double target = 0.0;    ///< ||psi||_{p*,inf} = omega^(1/p*)
  double gradient = 0.0;  ///< ||grad psi||_{p,inf} = omega^(1/p) (n-p)/p
};
PsiWeakNorms psi_weak_norms_closed_form(const LorentzParams& params);

/// Embedding report for psi at q = inf built from the closed forms above.
VerificationReport psi_closed_form_report(const LorentzParams& params);

/// (psi - delta)_+, which keeps the power behaviour near 0. delta > 0.
RadialProfile shifted_psi(const LorentzParams& params, double delta);

/// psi capped at height R^a and cut at radius R, shifted down to stay continuous:
/// R^a - R^-a on (0, 1/R), r^-a - R^-a on [1/R, R), zero after. R > 1.
RadialProfile capped_psi(const LorentzParams& params, double radius);

struct FamilyMember {
  std::string profile_id;
  RadialProfile profile;
};

struct EvidenceRow {
  std::string profile_id;
  double ratio = 0.0;
  double margin = 0.0;
  double quad_error = 0.0;
  /// margin > 10 * quad_error
  bool strict = false;
};

/// Embedding ratios and margins of every family member, in input order. Needs q < inf.
std::vector<EvidenceRow> non_attainment_evidence(const LorentzParams& params,
                                                 std::span<const FamilyMember> family);

std::vector<FamilyMember> v_eps_family(const LorentzParams& params, std::span<const double> epsilons);

}  // namespace lorentzkit
