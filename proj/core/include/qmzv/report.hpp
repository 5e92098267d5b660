#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qmzv/rational.hpp"
#include "qmzv/series.hpp"

namespace qmzv {

/// Location and values of the first disagreement between two sides of an identity.
/// exponent is the q-exponent (-1 for exact rational comparisons); u_exponents is the monomial
/// in the generating-function variables, empty when not applicable.
struct Witness {
  int exponent = -1;
  std::vector<int> u_exponents;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one verification case.
struct Report {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  std::optional<Witness> witness;  // present iff !pass
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

/// Coefficient-wise comparison; the witness is the smallest differing exponent.
Report compare_series(std::string identity, nlohmann::ordered_json params, const QSeries& lhs,
                      const QSeries& rhs);
Report compare_rational(std::string identity, nlohmann::ordered_json params, const Rational& lhs,
                        const Rational& rhs);
/// Pass report with no comparison attached (vacuous or aggregate cases).
Report make_pass(std::string identity, nlohmann::ordered_json params);
Report make_fail(std::string identity, nlohmann::ordered_json params, Witness witness);

/// Conjunction of several sub-checks under one name; the first failing witness wins.
Report combine(std::string identity, nlohmann::ordered_json params, const std::vector<Report>& parts);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// JSON array of reports, stable field order.
nlohmann::ordered_json reports_to_json(const std::vector<Report>& reports);

}  // namespace qmzv
