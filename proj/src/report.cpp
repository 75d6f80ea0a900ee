#include "markov/report.hpp"

namespace markov {

bool item_failed(const ResultItem& r) {
  if (!r.body.is_object()) return false;
  if (r.body.contains("match") && r.body["match"] == false) return true;
  return r.body.contains("status") && r.body["status"] == "Fails";
}

namespace {

std::string paint(const std::string& s, const char* code, bool color) {
  return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string line_summary(const json& b, bool color) {
  if (b.is_object() && b.contains("match")) return b["match"] == true ? paint("MATCH", "32", color) : paint("MISMATCH", "31", color);
  if (!b.is_object() || !b.contains("status")) return b.dump();
  std::string st = b["status"], cert = b.value("certificate", "");
  if (st == "Holds") return paint("HOLDS", "32", color) + " (" + (b.value("vacuous", false) ? "vacuous" : cert) + ")";
  if (st == "Fails") return paint("FAILS", "31", color);
  return paint("UNKNOWN", "33", color) + " (" + cert + ")";
}

}  // namespace

std::string render_report(const std::vector<ResultItem>& results, Format format, const std::string& command,
                          bool color) {
  if (format == Format::Json) {
    json doc = json::object();
    if (!command.empty()) {
      doc["schema"] = 1;
      doc["command"] = command;
    }
    json arr = json::array();
    for (auto& r : results) {
      json item{{"name", r.name}};
      if (r.body.is_object())
        for (auto& [k, v] : r.body.items()) item[k] = v;
      else
        item["value"] = r.body;
      arr.push_back(item);
    }
    doc["results"] = arr;
    return doc.dump(2) + "\n";
  }
  std::size_t width = 0;
  for (auto& r : results) width = std::max(width, r.name.size());
  std::string out;
  for (auto& r : results) {
    if (!r.text.empty()) {
      out += r.name + "\n" + r.text + (r.text.back() == '\n' ? "" : "\n");
      continue;
    }
    out += r.name + std::string(width - r.name.size() + 2, ' ') + line_summary(r.body, color) + "\n";
    if (!r.body.is_object()) continue;
    if (r.body.contains("mismatches"))
      for (auto& m : r.body["mismatches"]) out += "    " + m.get<std::string>() + "\n";
    if (r.body.value("status", "") == "Fails" && r.body.contains("witness"))
      out += "    witness: " + r.body["witness"].dump() + "\n";
    if (r.body.contains("trace"))
      for (auto& t : r.body["trace"]) out += "    note: " + t.get<std::string>() + "\n";
  }
  return out;
}

}  // namespace markov
