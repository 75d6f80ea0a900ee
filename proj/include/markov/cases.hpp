#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/verdict.hpp"

namespace markov {

struct CaseResult {
  std::string id;
  std::vector<std::string> tags;
  json expected;  // frozen in the fixture
  json actual;    // {"values": {..}, "checks": {name: verdict}}
  bool match = false;
  std::vector<std::string> mismatches;
};

std::string default_cases_dir();
std::vector<std::string> case_ids();  // registry order
std::vector<std::string> case_tags(const std::string& id);

CaseResult run_case(const std::string& id, const std::string& dir = default_cases_dir());
std::vector<CaseResult> run_all(const std::optional<std::string>& tag = std::nullopt,
                                const std::string& dir = default_cases_dir());

// expected objects match when every key they list matches; each element of an
// expected array must match some element of the actual array
bool subset_match(const json& expected, const json& actual, const std::string& path,
                  std::vector<std::string>& mismatches);

json to_json(const CaseResult& r);

}  // namespace markov
