#pragma once

#include <string>
#include <vector>

#include "markov/verdict.hpp"

namespace markov {

enum class Format { Text, Json };

// one line of a report: a verdict, an axiom report, a case result or a plain value
struct ResultItem {
  std::string name;
  json body;
  std::string text;  // shown instead of the summary in text mode (kernel tables)
};

// Fails when the body carries "status": "Fails" or "match": false
bool item_failed(const ResultItem& r);

// json: {"results": [..]}, with "schema" and "command" in front when command is set.
// text: one line per item ending in its summary, then witness or mismatch lines.
std::string render_report(const std::vector<ResultItem>& results, Format format, const std::string& command = "",
                          bool color = false);

}  // namespace markov
