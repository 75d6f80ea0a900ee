#include "markov/verdict.hpp"

namespace markov {

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::UnknownUpTo: return "UnknownUpTo";
  }
  return "?";
}

json to_json(const Verdict& v) {
  json j;
  j["status"] = status_name(v.status);
  j["vacuous"] = v.vacuous;
  j["witness"] = v.witness;
  j["certificate"] = v.certificate;
  j["trace"] = v.trace;
  return j;
}

std::string summary(const Verdict& v) {
  switch (v.status) {
    case Status::Holds:
      return v.vacuous ? "HOLDS (vacuous)" : "HOLDS (" + v.certificate + ")";
    case Status::Fails:
      return "FAILS " + v.witness.dump();
    case Status::UnknownUpTo:
      return "UNKNOWN (" + v.certificate + ")";
  }
  return "?";
}

}  // namespace markov
