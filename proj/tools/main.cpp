#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lorentzkit/extremals.hpp"
#include "lorentzkit/io.hpp"
#include "lorentzkit/transforms.hpp"
#include "props.hpp"

using namespace lorentzkit;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDivergence = 2, kViolation = 3 };

struct RunConfig {
  int n = 3;
  double p = 2.0;
  std::string q = "2";
  std::string builtin;
  std::string profile_path;
  std::string eps;
  std::string out;
  std::string format = "csv";
  double tol = 1e-11;
  std::string which = "target";
  std::uint64_t seed = 20240607;
  std::size_t count = 200;
};

double parse_q(const std::string& token) {
  if (token == "inf") return kInf;
  std::size_t used = 0;
  double q = 0.0;
  try {
    q = std::stod(token, &used);
  } catch (const std::exception&) {
    throw DomainError("--q must be a real >= 1 or the literal 'inf'");
  }
  if (used != token.size() || !std::isfinite(q)) throw DomainError("--q must be a real >= 1 or the literal 'inf'");
  return q;
}

std::string check_builtin(const std::string& name) {
  if (name == "psi" || name == "cap") return {};
  if (name.rfind("v_eps:", 0) == 0) {
    try {
      std::size_t used = 0;
      std::stod(name.substr(6), &used);
      if (used == name.size() - 6) return {};
    } catch (const std::exception&) {
    }
    return "v_eps needs a numeric epsilon, e.g. v_eps:0.1";
  }
  return "unknown builtin '" + name + "' (expected psi, cap or v_eps:<epsilon>)";
}

RadialProfile cap_profile() {
  return RadialProfile({make_segment(-1.0, 1.0, 1.0, 0.0, 1.0), make_segment(0.0, 0.0, 0.0, 1.0, kInf)});
}

RadialProfile resolve_profile(const RunConfig& cfg, const LorentzParams& lp) {
  if (!cfg.profile_path.empty()) return load_profile(cfg.profile_path);
  if (cfg.builtin == "psi") return make_psi(lp);
  if (cfg.builtin == "cap") return cap_profile();
  if (cfg.builtin.rfind("v_eps:", 0) == 0) return make_v_eps(std::stod(cfg.builtin.substr(6)), lp);
  throw DomainError("a profile is required: use --builtin or --profile");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad --eps entry '" + item + "'");
    }
    if (used != item.size()) throw DomainError("bad --eps entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("--eps is empty");
  return out;
}

std::string report_output(const VerificationReport& r, const std::string& format) {
  if (format == "json") return report_to_json(r) + "\n";
  return report_csv_header() + "\n" + report_csv_row(r) + "\n";
}

std::string evidence_json(const std::vector<EvidenceRow>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out += (i ? "," : "") + std::string("{\"profile_id\":\"") + r.profile_id + "\",\"ratio\":" +
           format_real(r.ratio) + ",\"margin\":" + format_real(r.margin) +
           ",\"quad_error\":" + format_real(r.quad_error) + ",\"strict\":" + (r.strict ? "true" : "false") + "}";
  }
  return out + "]\n";
}

int cmd_norm(const RunConfig& cfg, const LorentzParams& lp, std::string& out) {
  const auto u = resolve_profile(cfg, lp);
  const bool target = cfg.which == "target";
  const RadialFunction f = target ? RadialFunction(u) : RadialFunction(derivative_profile(u));
  const auto idx = target ? target_index(lp) : gradient_index(lp);
  QuadResult r;
  try {
    r = radial_lorentz_norm(f, idx, lp.dimension(), QuadOptions{cfg.tol});
  } catch (const DivergenceError& e) {
    throw DivergenceError(cfg.which, e.what());
  }
  if (r.diverged) throw DivergenceError(cfg.which, "the Lorentz integral diverges");
  if (cfg.format == "json") {
    out = "{\"which\":\"" + cfg.which + "\",\"n\":" + std::to_string(lp.n) + ",\"p\":" +
          format_real(idx.p) + ",\"q\":" + (lp.q_is_infinite() ? std::string("\"inf\"") : format_real(lp.q)) +
          ",\"value\":" + format_real(r.value) + ",\"abs_error\":" + format_real(r.abs_error_estimate) + "}\n";
  } else {
    out = "which,n,p,q,value,abs_error\n" + cfg.which + "," + std::to_string(lp.n) + "," +
          format_real(idx.p) + "," + format_real(lp.q) + "," + format_real(r.value) + "," +
          format_real(r.abs_error_estimate) + "\n";
  }
  return kOk;
}

int cmd_hardy(const RunConfig& cfg, const LorentzParams& lp, std::string& out) {
  const auto r = verify_hardy(resolve_profile(cfg, lp), lp, QuadOptions{cfg.tol});
  out = report_output(r, cfg.format);
  return r.holds ? kOk : kViolation;
}

int cmd_embed(const RunConfig& cfg, const LorentzParams& lp, std::string& out) {
  const auto r = verify_embedding(resolve_profile(cfg, lp), lp, QuadOptions{cfg.tol});
  out = report_output(r, cfg.format);
  return r.holds ? kOk : kViolation;
}

int cmd_sweep(const RunConfig& cfg, const LorentzParams& lp, std::string& out) {
  const auto eps = cfg.eps.empty() ? default_epsilons() : parse_list(cfg.eps);
  const auto rows = epsilon_sweep(lp, eps);
  if (cfg.format == "json") {
    out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out += (i ? "," : "") + std::string("{\"epsilon\":") + format_real(rows[i].epsilon) +
             ",\"ratio\":" + format_real(rows[i].ratio) + ",\"limit\":" + format_real(rows[i].limit) +
             ",\"rel_err\":" + format_real(rows[i].rel_err) + "}";
    out += "]\n";
  } else {
    out = sweep_csv(rows);
  }
  return kOk;
}

int cmd_attain(const RunConfig& cfg, const LorentzParams& lp, std::string& out) {
  std::vector<EvidenceRow> rows;
  bool ok = true;
  if (lp.q_is_infinite()) {
    const auto closed = psi_closed_form_report(lp);
    rows.push_back({"psi:closed_form", closed.ratio, closed.margin, closed.quad_error, false});
    std::vector<FamilyMember> family{{"psi", make_psi(lp)},
                                     {"psi:dilate:2", dilate(make_psi(lp), 2.0)},
                                     {"psi_shifted:0.5", shifted_psi(lp, 0.5)}};
    for (const auto& m : family) {
      const auto r = verify_embedding(m.profile, lp, QuadOptions{cfg.tol});
      rows.push_back({m.profile_id, r.ratio, r.margin, r.quad_error, false});
    }
    for (const auto& r : rows) ok = ok && std::abs(r.margin) <= 1e-8 * closed.sharp_constant;
  } else {
    const double a = (lp.n - lp.p) / lp.p;
    std::vector<double> eps;
    for (double e : {0.4, 0.2, 0.1, 0.05})
      if (e < a) eps.push_back(e);
    auto family = v_eps_family(lp, eps);
    for (double radius : {2.0, 4.0, 8.0, 16.0})
      family.push_back({"psi_capped:" + format_real(radius), capped_psi(lp, radius)});
    const auto base = make_v_eps(std::min(0.1, a / 2), lp);
    for (double lambda : {0.5, 2.0}) family.push_back({"v_eps:dilate:" + format_real(lambda), dilate(base, lambda)});
    rows = non_attainment_evidence(lp, family);
    for (const auto& r : rows) ok = ok && r.strict;
  }
  out = cfg.format == "json" ? evidence_json(rows) : evidence_csv(rows);
  return ok ? kOk : kViolation;
}

int cmd_props(const RunConfig& cfg, std::string& out) {
  const auto results = cli::run_invariants(cfg.seed, cfg.count);
  bool ok = true;
  if (cfg.format == "json") {
    out = "[";
    for (std::size_t i = 0; i < results.size(); ++i)
      out += (i ? "," : "") + std::string("{\"name\":\"") + results[i].name + "\",\"passed\":" +
             (results[i].passed ? "true" : "false") + ",\"detail\":\"" + results[i].detail + "\"}";
    out += "]\n";
  } else {
    out = "invariant,passed,detail\n";
    for (const auto& r : results) out += r.name + "," + (r.passed ? "true" : "false") + "," + r.detail + "\n";
  }
  for (const auto& r : results) ok = ok && r.passed;
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rearrangements, Lorentz norms and sharp Hardy/Sobolev-Lorentz inequality checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&cfg](CLI::App* sub, bool needs_profile) {
    sub->add_option("--n", cfg.n, "dimension")->check(CLI::Range(2, 1000));
    sub->add_option("--p", cfg.p, "gradient exponent");
    sub->add_option("--q", cfg.q, "second Lorentz index, a real >= 1 or 'inf'");
    sub->add_option("--out", cfg.out, "write output to this path instead of stdout");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--tol", cfg.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
    if (needs_profile) {
      auto* b = sub->add_option("--builtin", cfg.builtin, "psi, cap or v_eps:<epsilon>")
                    ->check(CLI::Validator(check_builtin, "BUILTIN"));
      auto* f = sub->add_option("--profile", cfg.profile_path, "profile JSON file");
      b->excludes(f);
    }
  };

  auto* norm = app.add_subcommand("norm", "Lorentz norm of a profile or of its gradient");
  add_common(norm, true);
  norm->add_option("--which", cfg.which, "target or gradient")->check(CLI::IsMember({"target", "gradient"}));
  auto* hardy = app.add_subcommand("hardy", "verify the Hardy inequality");
  add_common(hardy, true);
  auto* embed = app.add_subcommand("embed", "verify the Sobolev-Lorentz embedding");
  add_common(embed, true);
  auto* sweep = app.add_subcommand("sweep", "ratio of the v_eps family against its limit");
  add_common(sweep, false);
  sweep->add_option("--eps", cfg.eps, "comma-separated epsilons");
  auto* attain = app.add_subcommand("attain", "attainment (q = inf) or non-attainment evidence");
  add_common(attain, false);
  auto* props = app.add_subcommand("props", "run the invariant corpus");
  add_common(props, false);
  props->add_option("--seed", cfg.seed, "corpus seed");
  props->add_option("--count", cfg.count, "corpus size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string out;
  int status = kOk;
  try {
    const auto lp = LorentzParams::make(cfg.n, cfg.p, parse_q(cfg.q));
    if (*norm) status = cmd_norm(cfg, lp, out);
    else if (*hardy) status = cmd_hardy(cfg, lp, out);
    else if (*embed) status = cmd_embed(cfg, lp, out);
    else if (*sweep) status = cmd_sweep(cfg, lp, out);
    else if (*attain) status = cmd_attain(cfg, lp, out);
    else status = cmd_props(cfg, out);
  } catch (const ProfileFormatError& e) {
    std::cerr << "error: malformed profile";
    if (e.segment_index() >= 0) std::cerr << " (segment " << e.segment_index() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kUsage;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence (" << e.side() << "): " << e.what() << "\n";
    return kDivergence;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.out.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << out;
  }
  return status;
}
