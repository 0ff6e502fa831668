#pragma once

// Machine-readable report emitted by the CLI. Exact values are always
// strings ("p" or "p/q"), never JSON numbers.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "minshadow/exact.hpp"
#include "minshadow/solver.hpp"

namespace minshadow {

inline constexpr const char* kReportSchema = "minshadow-report/1";

using Json = nlohmann::ordered_json;

struct Verdict {
  std::string name;
  bool passed = true;
  std::string citation;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string command);

  const std::string& command() const { return command_; }
  Json& parameters() { return parameters_; }
  const Json& parameters() const { return parameters_; }
  Json& values() { return values_; }
  const Json& values() const { return values_; }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }

  void add_verdict(Verdict v) { verdicts_.push_back(std::move(v)); }
  bool passed() const;

  Json to_json() const;
  std::string dump() const;
  static Report from_json(const Json& j);

 private:
  std::string command_;
  Json parameters_ = Json::object();
  Json values_ = Json::object();
  std::vector<Verdict> verdicts_;
};

Json exact(const Rational& x);
/// {"weight": "coefficient", ...} over the nonzero coefficients.
Json enumerator_json(const WeightEnumerator& e);
/// "1 + 289y^8 + ..." over the nonzero coefficients, at most max_terms terms.
std::string format_polynomial(const WeightEnumerator& e, std::size_t max_terms = 0);

}  // namespace minshadow
