#pragma once

// JSON / CSV / table renderings of computed constants and certificates.
// Everything here is deterministic: numbers in CSV and tables use %.12g,
// JSON numbers use nlohmann's shortest round-trip form.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "banach2d/constants.hpp"
#include "banach2d/ext_real.hpp"
#include "banach2d/verify.hpp"

namespace banach2d {

/// One computed constant with the parameters it was evaluated at.
struct ResultRecord {
  std::string constant;
  std::string space;
  std::optional<ExtReal> t;
  std::optional<double> tau;
  std::optional<double> eps;
  std::optional<double> lambda;
  std::optional<double> mu;
  double value{0.0};
  std::optional<Method> method;
  std::optional<std::pair<Vec2, Vec2>> witnesses;
  std::optional<double> tau_star;
};

inline std::string format_g12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

inline std::string format_g12(const ExtReal& t) { return t.is_finite() ? format_g12(t.value()) : t.to_string(); }

/// Finite t as a JSON number, infinite t as the string "-inf" / "+inf".
inline nlohmann::json ext_real_to_json(const ExtReal& t) {
  if (t.is_finite()) return t.value();
  return t.to_string();
}

namespace detail {

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

inline nlohmann::json vec_json(const Vec2& v) { return nlohmann::json::array({v.x1, v.x2}); }

}  // namespace detail

inline nlohmann::json to_json(const ResultRecord& r) {
  nlohmann::json j;
  j["constant"] = r.constant;
  j["space"] = r.space;
  j["t"] = r.t ? ext_real_to_json(*r.t) : nlohmann::json(nullptr);
  j["tau"] = detail::opt_json(r.tau);
  if (r.eps) j["eps"] = *r.eps;
  if (r.lambda) j["lambda"] = *r.lambda;
  if (r.mu) j["mu"] = *r.mu;
  j["value"] = r.value;
  j["method"] = r.method ? nlohmann::json(std::string(to_string(*r.method))) : nlohmann::json(nullptr);
  if (r.witnesses) {
    j["witnesses"] = nlohmann::json::array({detail::vec_json(r.witnesses->first), detail::vec_json(r.witnesses->second)});
  } else {
    j["witnesses"] = nullptr;
  }
  j["tau_star"] = detail::opt_json(r.tau_star);
  return j;
}

inline std::string csv_header(bool with_eps) {
  return with_eps ? "space,constant,t,tau,eps,value,method" : "space,constant,t,tau,value,method";
}

inline std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const ResultRecord& r, bool with_eps) {
  std::string row = csv_field(r.space) + "," + csv_field(r.constant) + ",";
  row += (r.t ? format_g12(*r.t) : "") + ",";
  row += (r.tau ? format_g12(*r.tau) : "") + ",";
  if (with_eps) row += (r.eps ? format_g12(*r.eps) : "") + ",";
  row += format_g12(r.value) + ",";
  row += r.method ? std::string(to_string(*r.method)) : "";
  return row;
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["claim_id"] = std::string(to_string(c.claim));
  if (!c.part.empty()) j["part"] = c.part;
  j["space"] = c.space;
  nlohmann::json p = nlohmann::json::object();
  if (c.params.t) p["t"] = ext_real_to_json(*c.params.t);
  if (c.params.t1) p["t1"] = *c.params.t1;
  if (c.params.t2) p["t2"] = *c.params.t2;
  if (c.params.tau) p["tau"] = *c.params.tau;
  if (c.params.tau_left) p["tau_left"] = *c.params.tau_left;
  if (c.params.tau_right) p["tau_right"] = *c.params.tau_right;
  j["params"] = p;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["margin"] = c.margin;
  j["tol"] = c.tol;
  j["noise_floor"] = c.noise_floor;
  j["pass"] = c.pass;
  j["verdict"] = std::string(to_string(c.verdict));
  j["grid"] = c.grid;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

/// "t=2 tau=0.5" style summary of the parameters of a certificate.
inline std::string params_summary(const CertificateParams& p) {
  std::string s;
  auto add = [&s](const char* k, const std::string& v) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += v;
  };
  if (p.t) add("t", format_g12(*p.t));
  if (p.t1) add("t1", format_g12(*p.t1));
  if (p.t2) add("t2", format_g12(*p.t2));
  if (p.tau_left) add("tau_l", format_g12(*p.tau_left));
  if (p.tau) add("tau", format_g12(*p.tau));
  if (p.tau_right) add("tau_r", format_g12(*p.tau_right));
  return s.empty() ? "-" : s;
}

inline void write_certificate_table(std::ostream& os, const std::vector<Certificate>& certs) {
  char line[256];
  std::snprintf(line, sizeof line, "%-17s %-6s %-34s %-16s %-16s %-14s %s\n", "claim", "part", "params", "lhs", "rhs",
                "margin", "verdict");
  os << line;
  for (const auto& c : certs) {
    std::snprintf(line, sizeof line, "%-17s %-6s %-34s %-16s %-16s %-14s %s", std::string(to_string(c.claim)).c_str(),
                  c.part.empty() ? "-" : c.part.c_str(), params_summary(c.params).c_str(), format_g12(c.lhs).c_str(),
                  format_g12(c.rhs).c_str(), format_g12(c.margin).c_str(), std::string(to_string(c.verdict)).c_str());
    os << line;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << '\n';
  }
}

inline std::string certificate_csv_header() {
  return "claim_id,part,space,t,t1,t2,tau,tau_left,tau_right,lhs,rhs,margin,tol,pass,verdict,grid";
}

inline std::string certificate_csv_row(const Certificate& c) {
  auto opt = [](const auto& v) { return v ? format_g12(*v) : std::string(); };
  std::string row = std::string(to_string(c.claim)) + "," + c.part + "," + csv_field(c.space) + ",";
  row += opt(c.params.t) + "," + opt(c.params.t1) + "," + opt(c.params.t2) + "," + opt(c.params.tau) + ",";
  row += opt(c.params.tau_left) + "," + opt(c.params.tau_right) + ",";
  row += format_g12(c.lhs) + "," + format_g12(c.rhs) + "," + format_g12(c.margin) + "," + format_g12(c.tol) + ",";
  row += std::string(c.pass ? "true" : "false") + "," + std::string(to_string(c.verdict)) + "," + std::to_string(c.grid);
  return row;
}

}  // namespace banach2d
