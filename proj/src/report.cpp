#include "minshadow/report.hpp"

#include <algorithm>

namespace minshadow {

Report::Report(std::string command) : command_(std::move(command)) {}

bool Report::passed() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.passed; });
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command_;
  j["parameters"] = parameters_;
  j["passed"] = passed();
  Json verdicts = Json::array();
  for (const auto& v : verdicts_) {
    verdicts.push_back({{"name", v.name}, {"passed", v.passed}, {"citation", v.citation}, {"detail", v.detail}});
  }
  j["verdicts"] = std::move(verdicts);
  j["values"] = values_;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

Report Report::from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != kReportSchema) {
    throw std::invalid_argument("unsupported report schema " + j.at("schema").get<std::string>());
  }
  Report r(j.at("command").get<std::string>());
  r.parameters_ = j.at("parameters");
  r.values_ = j.at("values");
  for (const auto& v : j.at("verdicts")) {
    r.verdicts_.push_back({v.at("name").get<std::string>(), v.at("passed").get<bool>(),
                           v.at("citation").get<std::string>(), v.at("detail").get<std::string>()});
  }
  return r;
}

Json exact(const Rational& x) { return to_string(x); }

Json enumerator_json(const WeightEnumerator& e) {
  Json out = Json::object();
  for (int w = 0; w <= e.n; ++w) {
    if (e.at(w) != 0) {
      out[std::to_string(w)] = to_string(e.at(w));
    }
  }
  return out;
}

std::string format_polynomial(const WeightEnumerator& e, std::size_t max_terms) {
  std::string out;
  std::size_t terms = 0;
  for (int w = 0; w <= e.n; ++w) {
    const Rational c = e.at(w);
    if (c == 0) {
      continue;
    }
    if (max_terms != 0 && terms == max_terms) {
      out += " + ...";
      break;
    }
    const Rational mag = abs(c);
    if (terms == 0) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && w != 0;
    if (!unit) {
      out += to_string(mag);
    }
    if (w == 1) {
      out += "y";
    } else if (w > 1) {
      out += "y^" + std::to_string(w);
    }
    ++terms;
  }
  return out.empty() ? "0" : out;
}

}  // namespace minshadow
