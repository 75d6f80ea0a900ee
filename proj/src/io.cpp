#include "markov/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "markov/errors.hpp"

namespace markov {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

namespace {

int element_index(const json& v, const std::vector<std::string>& elements) {
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= static_cast<int>(elements.size())) throw UsageError("table index out of range");
    return i;
  }
  if (v.is_string())
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == v.get<std::string>()) return static_cast<int>(i);
  throw UsageError("unknown semiring element " + v.dump());
}

std::vector<std::vector<int>> table(const json& t, const std::vector<std::string>& elements, const char* what) {
  if (!t.is_array() || t.size() != elements.size()) throw UsageError(std::string(what) + " table must be square");
  std::vector<std::vector<int>> out;
  for (auto& row : t) {
    if (!row.is_array() || row.size() != elements.size()) throw UsageError(std::string(what) + " table must be square");
    std::vector<int> r;
    for (auto& v : row) r.push_back(element_index(v, elements));
    out.push_back(r);
  }
  return out;
}

}  // namespace

SemiringPtr semiring_from_json(const json& j, const std::string& name) {
  try {
    FiniteTable t;
    t.elements = j.at("elements").get<std::vector<std::string>>();
    if (t.elements.empty()) throw UsageError("semiring file lists no elements");
    t.add = table(j.at("add"), t.elements, "add");
    t.mul = table(j.at("mul"), t.elements, "mul");
    t.zero = element_index(j.at("zero"), t.elements);
    t.one = element_index(j.at("one"), t.elements);
    return table_semiring(j.value("name", name), t);
  } catch (const json::exception& e) {
    throw UsageError("malformed semiring file: " + std::string(e.what()));
  }
}

SemiringPtr load_semiring(const std::string& selector) {
  for (auto& n : builtin_names())
    if (n == selector || (selector == "signed-rational" && n == "rational")) return builtin(selector);
  if (std::filesystem::exists(selector)) {
    // one instance per file, so kernels loaded from the same file compose
    static std::map<std::string, SemiringPtr> loaded;
    std::string key = std::filesystem::weakly_canonical(selector).string();
    auto it = loaded.find(key);
    if (it != loaded.end()) return it->second;
    return loaded[key] = semiring_from_json(read_json_file(selector), std::filesystem::path(selector).stem().string());
  }
  throw UsageError("unknown semiring " + selector + " (not a builtin and no such file)");
}

FinSet finset_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("object must be a list of labels or of factors");
  if (j.empty()) return FinSet::unit();
  if (j.front().is_string()) return FinSet::atom(j.get<std::vector<std::string>>());
  std::vector<FinSet> parts;
  for (auto& f : j) {
    if (!f.is_array() || f.empty() || !f.front().is_string()) throw UsageError("factor must be a list of labels");
    parts.push_back(FinSet::atom(f.get<std::vector<std::string>>()));
  }
  return FinSet::product(parts);
}

json finset_json(const FinSet& X) {
  json j = json::array();
  for (std::size_t k = 0; k < X.arity(); ++k) j.push_back(X.factor(k).labels());
  return j;
}

Kernel kernel_from_json(const json& j, SemiringPtr R) {
  try {
    if (!R) R = load_semiring(j.at("semiring").get<std::string>());
    FinSet dom = finset_from_json(j.at("dom")), cod = finset_from_json(j.at("cod"));
    const json& entries = j.at("entries");
    if (!entries.is_object()) throw UsageError("entries must be an object keyed by domain labels");
    for (auto& [a, col] : entries.items()) {
      dom.index_of(a);
      if (!col.is_object()) throw UsageError("column " + a + " must be an object");
      for (auto& [x, v] : col.items()) cod.index_of(x);
    }
    const Semiring& S = *R;
    return Kernel::build(R, dom, cod, [&](std::size_t x, std::size_t a) {
      auto col = entries.find(dom.label(a));
      if (col == entries.end()) return S.zero();
      auto v = col->find(cod.label(x));
      if (v == col->end()) return S.zero();
      return S.parse(v->is_string() ? v->get<std::string>() : v->dump());
    });
  } catch (const json::exception& e) {
    throw UsageError("malformed kernel: " + std::string(e.what()));
  }
}

Kernel load_kernel(const std::string& path, SemiringPtr R) {
  try {
    return kernel_from_json(read_json_file(path), std::move(R));
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace markov
