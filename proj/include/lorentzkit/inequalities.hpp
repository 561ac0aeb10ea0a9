#pragma once

#include <string>

#include "lorentzkit/norms.hpp"

namespace lorentzkit {

enum class InequalityId { H_p, A_pq, A_pinf };

std::string to_string(InequalityId id);

/// Outcome of one inequality check. `ratio <= sharp_constant` means the
/// inequality holds; `holds` applies the quadrature tolerance band.
struct VerificationReport {
  InequalityId inequality_id = InequalityId::A_pq;
  LorentzParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double sharp_constant = 0.0;
  double ratio = 0.0;
  double margin = 0.0;
  double quad_error = 0.0;
  bool holds = false;
};

/// (p / (n - p)) * omega_n^(-1/n); the same for every q.
double sharp_constant(const LorentzParams& params);
/// (p / (n - p)) * Gamma(1 + n/2)^(1/n) / sqrt(pi). Throws DomainError unless 1 <= p < n.
double sharp_constant_gamma_form(int n, double p);

/// ratio <= sharp * (1 + 1e-7) + 10 * quad_error.
bool within_band(double ratio, double sharp, double quad_error);

/// \int u^p / |x|^p dx = n omega_n \int_0^inf u(r)^p r^(n-p-1) dr.
QuadResult hardy_lhs(const RadialProfile& u, const LorentzParams& params,
                     const QuadOptions& opts = {});

/// ||grad u||_p^p = n omega_n \int_0^inf |u'(r)|^p r^(n-1) dr.
QuadResult gradient_energy(const RadialProfile& u, const LorentzParams& params,
                           const QuadOptions& opts = {});

/// (H_p) with the ratio ((n-p)/p)^p hardy_lhs / ||grad u||_p^p against 1.
/// Throws DivergenceError naming the side ("hardy_lhs" or "gradient").
VerificationReport verify_hardy(const RadialProfile& u, const LorentzParams& params,
                                const QuadOptions& opts = {});

/// (A_{p,q}) with ratio ||u||_{p*,q} / ||grad u||_{p,q}; q = inf uses weak norms.
/// |grad u| is always rearranged before norming. Throws DivergenceError
/// naming the side ("target" or "gradient").
VerificationReport verify_embedding(const RadialProfile& u, const LorentzParams& params,
                                    const QuadOptions& opts = {});

/// Assembles a report from two norms and their error estimates.
VerificationReport make_embedding_report(const LorentzParams& params, const QuadResult& target,
                                         const QuadResult& gradient);

}  // namespace lorentzkit
