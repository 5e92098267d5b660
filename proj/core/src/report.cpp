#include "qmzv/report.hpp"

namespace qmzv {

Report compare_series(std::string identity, nlohmann::ordered_json params, const QSeries& lhs,
                      const QSeries& rhs) {
  if (lhs.order() != rhs.order()) {
    throw DomainError("compare_series: both sides must share one truncation order");
  }
  for (int m = 0; m <= lhs.order(); ++m) {
    if (lhs[m] != rhs[m]) {
      return make_fail(std::move(identity), std::move(params),
                       Witness{m, {}, to_string(lhs[m]), to_string(rhs[m])});
    }
  }
  return make_pass(std::move(identity), std::move(params));
}

Report compare_rational(std::string identity, nlohmann::ordered_json params, const Rational& lhs,
                        const Rational& rhs) {
  if (lhs != rhs) {
    return make_fail(std::move(identity), std::move(params),
                     Witness{-1, {}, to_string(lhs), to_string(rhs)});
  }
  return make_pass(std::move(identity), std::move(params));
}

Report make_pass(std::string identity, nlohmann::ordered_json params) {
  Report r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  return r;
}

Report make_fail(std::string identity, nlohmann::ordered_json params, Witness witness) {
  Report r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.pass = false;
  r.witness = std::move(witness);
  return r;
}

Report combine(std::string identity, nlohmann::ordered_json params, const std::vector<Report>& parts) {
  for (const auto& p : parts) {
    if (!p.pass) {
      Report r = make_fail(std::move(identity), std::move(params), *p.witness);
      r.details["failed_check"] = p.identity;
      r.details["failed_params"] = p.params;
      return r;
    }
  }
  Report r = make_pass(std::move(identity), std::move(params));
  r.details["checks"] = parts.size();
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.witness) {
    nlohmann::ordered_json w;
    w["exponent"] = r.witness->exponent;
    if (!r.witness->u_exponents.empty()) w["u_exponents"] = r.witness->u_exponents;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    j["witness"] = std::move(w);
  }
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.identity = j.at("identity").get<std::string>();
  r.params = nlohmann::ordered_json::parse(j.at("params").dump());
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw DomainError("report status must be pass or fail");
  r.pass = status == "pass";
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    Witness wit;
    wit.exponent = w.at("exponent").get<int>();
    if (w.contains("u_exponents")) wit.u_exponents = w.at("u_exponents").get<std::vector<int>>();
    wit.lhs = w.at("lhs").get<std::string>();
    wit.rhs = w.at("rhs").get<std::string>();
    r.witness = std::move(wit);
  }
  if (!r.pass && !r.witness) throw DomainError("failed report without witness");
  if (j.contains("details")) r.details = nlohmann::ordered_json::parse(j.at("details").dump());
  return r;
}

nlohmann::ordered_json reports_to_json(const std::vector<Report>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace qmzv
