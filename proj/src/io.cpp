#include "lorentzkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lorentzkit {

using nlohmann::json;

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

double number_field(const json& seg, const char* key, int index) {
  const auto it = seg.find(key);
  if (it == seg.end()) throw ProfileFormatError(index, std::string("segment ") + std::to_string(index) + ": missing field '" + key + "'");
  if (it->is_number()) return it->get<double>();
  if (it->is_string() && it->get<std::string>() == "inf" && std::string(key) == "hi") return kInf;
  throw ProfileFormatError(index, std::string("segment ") + std::to_string(index) + ": field '" + key + "' is not a number");
}

int index_in_message(const std::string& msg) {
  const auto pos = msg.find("segment ");
  if (pos == std::string::npos) return -1;
  return std::atoi(msg.c_str() + pos + 8);
}

std::string q_json(double q) {
  return std::isinf(q) ? "\"inf\"" : format_real(q);
}

}  // namespace

RadialProfile parse_profile_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProfileFormatError(-1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array())
    throw ProfileFormatError(-1, "expected an object with a \"segments\" array");
  const auto& arr = doc["segments"];
  if (arr.empty()) throw ProfileFormatError(-1, "\"segments\" is empty");
  std::vector<PowerAffineSegment> segs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!arr[i].is_object()) throw ProfileFormatError(idx, "segment " + std::to_string(i) + ": not an object");
    segs.push_back(make_segment(number_field(arr[i], "c", idx), number_field(arr[i], "alpha", idx),
                                number_field(arr[i], "d", idx), number_field(arr[i], "lo", idx),
                                number_field(arr[i], "hi", idx)));
  }
  try {
    return RadialProfile(std::move(segs));
  } catch (const DomainError& e) {
    throw ProfileFormatError(index_in_message(e.what()), e.what());
  }
}

RadialProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProfileFormatError(-1, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_profile_json(ss.str());
}

std::string profile_to_json(const RadialProfile& p) {
  std::string out = "{\"segments\":[";
  bool first = true;
  for (const auto& s : p.segments()) {
    if (!first) out += ",";
    first = false;
    out += "{\"c\":" + format_real(s.c) + ",\"alpha\":" + format_real(s.alpha) +
           ",\"d\":" + format_real(s.d) + ",\"lo\":" + format_real(s.lo) + ",\"hi\":" +
           (std::isinf(s.hi) ? std::string("\"inf\"") : format_real(s.hi)) + "}";
  }
  return out + "]}";
}

std::string report_to_json(const VerificationReport& r) {
  std::ostringstream os;
  os << "{\"inequality_id\":\"" << to_string(r.inequality_id) << "\","
     << "\"params\":{\"n\":" << r.params.n << ",\"p\":" << format_real(r.params.p)
     << ",\"q\":" << q_json(r.params.q) << "},"
     << "\"lhs\":" << format_real(r.lhs) << ",\"rhs\":" << format_real(r.rhs)
     << ",\"sharp_constant\":" << format_real(r.sharp_constant)
     << ",\"ratio\":" << format_real(r.ratio) << ",\"margin\":" << format_real(r.margin)
     << ",\"quad_error\":" << format_real(r.quad_error)
     << ",\"holds\":" << (r.holds ? "true" : "false") << "}";
  return os.str();
}

std::string report_csv_header() { return "inequality_id,n,p,q,lhs,rhs,ratio,sharp,margin,quad_error,holds"; }

std::string report_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.inequality_id) << ',' << r.params.n << ',' << format_real(r.params.p) << ','
     << format_real(r.params.q) << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
     << format_real(r.ratio) << ',' << format_real(r.sharp_constant) << ','
     << format_real(r.margin) << ',' << format_real(r.quad_error) << ','
     << (r.holds ? "true" : "false");
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,ratio,limit,rel_err\n";
  for (const auto& r : rows)
    out += format_real(r.epsilon) + "," + format_real(r.ratio) + "," + format_real(r.limit) + "," +
           format_real(r.rel_err) + "\n";
  return out;
}

std::string evidence_csv(const std::vector<EvidenceRow>& rows) {
  std::string out = "profile_id,ratio,margin,quad_error,strict\n";
  for (const auto& r : rows)
    out += r.profile_id + "," + format_real(r.ratio) + "," + format_real(r.margin) + "," +
           format_real(r.quad_error) + "," + (r.strict ? "true" : "false") + "\n";
  return out;
}

}  // namespace lorentzkit
