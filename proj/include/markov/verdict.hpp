#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace markov {

using json = nlohmann::ordered_json;

enum class Status { Holds, Fails, UnknownUpTo };

struct Verdict {
  Status status = Status::Holds;
  // "exhaustive", "theory:<tag>" or "bound:<n>"
  std::string certificate = "exhaustive";
  bool vacuous = false;
  json witness;  // null unless Fails
  std::vector<std::string> trace;

  static Verdict holds(std::string cert = "exhaustive") { return {Status::Holds, std::move(cert), false, nullptr, {}}; }
  static Verdict vacuous_holds(std::string why) {
    Verdict v{Status::Holds, "exhaustive", true, nullptr, {}};
    v.trace.push_back(std::move(why));
    return v;
  }
  static Verdict fails(json w, std::string cert = "exhaustive") {
    return {Status::Fails, std::move(cert), false, std::move(w), {}};
  }
  static Verdict unknown(std::size_t bound) {
    return {Status::UnknownUpTo, "bound:" + std::to_string(bound), false, nullptr, {}};
  }

  bool ok() const { return status == Status::Holds; }
  bool failed() const { return status == Status::Fails; }
  Verdict& note(std::string s) {
    trace.push_back(std::move(s));
    return *this;
  }
};

std::string status_name(Status s);
json to_json(const Verdict& v);
// "HOLDS (exhaustive)", "FAILS at ...", "UNKNOWN (bound:3)"
std::string summary(const Verdict& v);

}  // namespace markov
