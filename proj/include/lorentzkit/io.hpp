#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lorentzkit/extremals.hpp"

namespace lorentzkit {

/// Malformed profile document. `segment_index` is -1 for document-level problems.
class ProfileFormatError : public DomainError {
 public:
  ProfileFormatError(int segment_index, const std::string& what)
      : DomainError(what), segment_index_(segment_index) {}
  int segment_index() const { return segment_index_; }

 private:
  int segment_index_;
};

/// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_real(double x);

/// {"segments":[{"c":..,"alpha":..,"d":..,"lo":..,"hi":..|"inf"}, ...]}
RadialProfile parse_profile_json(std::string_view text);
RadialProfile load_profile(const std::string& path);
std::string profile_to_json(const RadialProfile& p);

std::string report_to_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string evidence_csv(const std::vector<EvidenceRow>& rows);

}  // namespace lorentzkit
