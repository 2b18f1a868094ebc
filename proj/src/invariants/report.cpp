#include <lcext/invariants.hpp>

#include <json.hpp>

#include <sstream>

namespace lcext {

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "identity: " << identity << "\n";
  out << "lhs: " << render_value(lhs) << "\n";
  out << "rhs: " << render_value(rhs) << "\n";
  out << "verdict: " << verdict_name(verdict) << "\n";
  out << "hypotheses:";
  if (hypotheses.empty()) out << " none";
  for (std::size_t i = 0; i < hypotheses.size(); ++i) out << (i ? ", " : " ") << hypotheses[i];
  out << "\n";
  for (const auto& [k, v] : details) out << k << ": " << v << "\n";
  for (const auto& c : caveats) out << "caveat: " << c << "\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["lhs"] = render_value(lhs);
  j["rhs"] = render_value(rhs);
  j["verdict"] = verdict_name(verdict);
  j["hypotheses"] = hypotheses;
  j["caveats"] = caveats;
  nlohmann::ordered_json details_json = nlohmann::ordered_json::object();
  for (const auto& [k, v] : details) details_json[k] = v;
  j["details"] = details_json;
  return j.dump(2);
}

}  // namespace lcext
