#pragma once

#include <string>
#include <utility>

#include <json.hpp>

namespace symdyn {

enum class Outcome { yes, no, unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    default: return "unknown";
  }
}

// Three-valued decision result. A yes carries a machine-checkable
// certificate, a no carries the obstruction that separated the inputs,
// an unknown carries diagnostics (typically a bound-exhaustion report).
struct Verdict {
  Outcome outcome{Outcome::unknown};
  nlohmann::json certificate;
  nlohmann::json obstruction;
  std::string diagnostics;

  static Verdict yes(nlohmann::json cert = nlohmann::json::object()) {
    Verdict v;
    v.outcome = Outcome::yes;
    v.certificate = std::move(cert);
    return v;
  }
  static Verdict no(nlohmann::json obst = nlohmann::json::object()) {
    Verdict v;
    v.outcome = Outcome::no;
    v.obstruction = std::move(obst);
    return v;
  }
  static Verdict unknown(std::string diag, nlohmann::json extra = nlohmann::json::object()) {
    Verdict v;
    v.outcome = Outcome::unknown;
    v.diagnostics = std::move(diag);
    v.obstruction = std::move(extra);
    return v;
  }

  bool is_yes() const { return outcome == Outcome::yes; }
  bool is_no() const { return outcome == Outcome::no; }
  bool is_unknown() const { return outcome == Outcome::unknown; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["verdict"] = to_string(outcome);
    if (outcome == Outcome::yes) j["certificate"] = certificate;
    if (outcome == Outcome::no) j["obstruction"] = obstruction;
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    return j;
  }
};

}  // namespace symdyn
