#include "minkq/report_io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace minkq {

std::string serialize_witness(const std::vector<std::pair<std::string, Mat>>& parts) {
  std::ostringstream os;
  for (const auto& [label, m] : parts) os << label << ":\n" << to_text(m);
  return os.str();
}

std::vector<std::pair<std::string, Mat>> parse_witness(const std::string& text) {
  std::vector<std::pair<std::string, Mat>> out;
  std::istringstream in(text);
  std::string line;
  std::string label;
  std::ostringstream body;
  auto flush = [&]() {
    if (!label.empty()) out.emplace_back(label, mat_from_text(body.str()));
    body.str("");
    body.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == ':') {
      flush();
      label = line.substr(0, line.size() - 1);
    } else {
      body << line << "\n";
    }
  }
  flush();
  return out;
}

std::string render_text(const CheckReport& report) {
  std::ostringstream os;
  std::string tag = to_string(report.status);
  for (auto& c : tag) c = static_cast<char>(std::toupper(c));
  os << "[" << tag << "] " << report.name;
  if (!report.params.empty()) {
    os << " {";
    bool first = true;
    for (const auto& [k, v] : report.params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << "}";
  }
  os << "  (" << report.anchor << ")\n";
  for (const auto& d : report.details) os << "    " << d << "\n";
  return os.str();
}

std::string render_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  int pass = 0, fail = 0, undet = 0;
  for (const auto& r : reports) {
    os << render_text(r);
    switch (r.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::undetermined: ++undet; break;
    }
  }
  os << "summary: " << reports.size() << " checks, " << pass << " pass, " << fail << " fail, "
     << undet << " undetermined\n";
  return os.str();
}

std::string render_json(const std::vector<CheckReport>& reports, std::uint64_t seed) {
  nlohmann::ordered_json root;
  root["version"] = 1;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int pass = 0, fail = 0, undet = 0;
  for (const auto& r : reports) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    c["params"] = params;
    c["status"] = to_string(r.status);
    c["anchor"] = r.anchor;
    c["details"] = r.details;
    if (!r.certificate.empty()) c["certificate"] = r.certificate;
    checks.push_back(std::move(c));
    switch (r.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::undetermined: ++undet; break;
    }
  }
  root["checks"] = std::move(checks);
  nlohmann::ordered_json summary;
  summary["total"] = reports.size();
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["undetermined"] = undet;
  summary["status"] = to_string(aggregate_status(reports));
  summary["seed"] = std::to_string(seed);
  root["summary"] = std::move(summary);
  return root.dump(2) + "\n";
}

}  // namespace minkq
