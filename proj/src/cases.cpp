#include "markov/cases.hpp"

#include <functional>
#include <map>

#include "markov/axioms.hpp"
#include "markov/errors.hpp"
#include "markov/io.hpp"
#include "markov/pointed.hpp"
#include "markov/properties.hpp"

#ifndef MARKOV_CASES_DIR
#define MARKOV_CASES_DIR "cases"
#endif

namespace markov {

namespace {

struct Report {
  json values = json::object();
  json checks = json::object();
  void check(const std::string& name, const Verdict& v) { checks[name] = to_json(v); }
  json done() const { return json{{"values", values}, {"checks", checks}}; }
};

Verdict equal_check(const Kernel& actual, const Kernel& expected) {
  if (actual == expected) return Verdict::holds();
  return Verdict::fails(json{{"expected", kernel_json(expected)}, {"actual", kernel_json(actual)}});
}

Verdict flag(bool ok, json why) { return ok ? Verdict::holds() : Verdict::fails(std::move(why)); }

Kernel input_kernel(const json& in, const std::string& key) { return kernel_from_json(in.at(key)); }

json finstoch_pm_dmi(const json& in) {
  Report r;
  Kernel q = input_kernel(in, "q"), base = input_kernel(in, "base"), da = input_kernel(in, "delta_a");
  r.check("marginal_x_equals_base", equal_check(marginalize(q, {0}), base));
  r.check("marginal_e_equals_delta_a", equal_check(marginalize(q, {1}), da));
  r.check("verify_dilation", verify_dilation(q, base));
  r.check("deterministic_in_x", is_deterministic_in(q, 1));
  r.check("dmi", check_dmi_instance(Dilation(base, q)));
  r.check("base_noncreative", is_noncreative(base, SearchOptions{3, 0, 0, 1u << 16}));
  return r.done();
}

json rank1_positivity(const json& in) {
  Report r;
  Kernel f = input_kernel(in, "f"), g = input_kernel(in, "g"), gf = input_kernel(in, "gf");
  std::size_t rank = rational_rank(f);
  r.values["rank_f"] = rank;
  r.check("f_rank_one", flag(rank == 1, json{{"rank", rank}}));
  r.check("g_stochastic", flag(is_stochastic(g), json{{"kernel", "g"}}));
  r.check("f_deterministic", is_deterministic(f));
  r.check("gf_equals_delta", equal_check(compose(g, f), gf));
  r.check("gf_deterministic", is_deterministic(compose(g, f)));
  r.check("positivity", check_positivity_instance(f, g).verdict);
  return r.done();
}

json quantale_z2i(const json& in) {
  Report r;
  SemiringPtr S = builtin("ideal-z2i");
  const Semiring& R = *S;
  Value s = R.parse(in.at("s")), t = R.parse(in.at("t")), v = R.parse(in.at("v")), w = R.parse(in.at("w"));
  Value vw = R.add(v, w);
  r.values["s+t"] = R.add(s, t).str();
  r.values["s^2"] = R.mul(s, s).str();
  r.values["t^2"] = R.mul(t, t).str();
  r.values["st"] = R.mul(s, t).str();
  r.values["s(v+w)"] = R.mul(s, vw).str();
  r.values["t(v+w)"] = R.mul(t, vw).str();
  r.values["sv"] = R.mul(s, v).str();
  r.values["tv"] = R.mul(t, v).str();
  r.check("zerosumfree", check_zerosumfree(R));
  r.check("entire", check_entire(R));
  r.check("causality", check_causality_criterion(R));
  return r.done();
}

FiniteLattice lattice_by_name(const std::string& n) {
  if (n.rfind("chain-", 0) == 0) return chain_lattice(std::stoi(n.substr(6)));
  if (n == "bool-4") return boolean_lattice(2);
  if (n == "bool-8") return boolean_lattice(3);
  if (n.rfind("div-", 0) == 0) return divisor_lattice(std::stoi(n.substr(4)));
  if (n == "m3") return m3_lattice();
  throw UsageError("unknown lattice " + n);
}

json lattice_causal(const json& in) {
  Report r;
  for (auto& n : in.at("lattices")) {
    std::string name = n.get<std::string>();
    SemiringPtr S = builtin(name);
    r.check("causality:" + name, check_causality_criterion(*S, Strategy::exhaustive()));
    r.check("axioms:" + name, check_semiring_axioms(*S, Strategy::exhaustive()));
    r.check("lattice:" + name, validate_lattice(lattice_by_name(name)));
  }
  std::string bad = in.at("non_distributive");
  r.check("lattice:" + bad, validate_lattice(lattice_by_name(bad)));
  return r.done();
}

json convex_decomposition(const json& in) {
  Report r;
  Kernel p = input_kernel(in, "p"), m = input_kernel(in, "m"), k = input_kernel(in, "k"), pi = input_kernel(in, "pi");
  r.check("km_equals_p", equal_check(compose(k, m), p));
  Dilation d = make_from_decomposition(p, m, k);
  r.check("decomposition_is_dilation", verify_dilation(d.total(), p));
  r.check("decomposition_equals_pi", equal_check(d.total(), pi));
  r.check("env_marginal_equals_m", equal_check(d.env_marginal(), m));
  return r.done();
}

json dileq_vs_ase(const json& in) {
  Report r;
  Kernel p = input_kernel(in, "p"), f = input_kernel(in, "f"), g = input_kernel(in, "g");
  r.check("compose_equal", equal_check(compose(f, p), compose(g, p)));
  r.check("as_equal", as_equal(f, g, p));
  Verdict d = dilational_equal(f, g, p, SearchOptions{3, 0, 0, 1u << 16});
  r.check("dilational_equal", d);
  json cp = kernel_json(compose(copy(p.semiring(), p.cod()), p));
  bool same = d.failed() && d.witness.contains("dilation") && d.witness["dilation"] == cp;
  r.check("witness_is_copy_of_p", flag(same, json{{"expected", cp}}));
  return r.done();
}

json broadcasting_pm(const json& in) {
  Report r;
  Kernel b = input_kernel(in, "b");
  r.check("b_broadcasting", is_broadcasting(b));
  Kernel cp = copy(b.semiring(), b.dom());
  r.check("b_differs_from_copy", flag(b != cp, json{{"b", "equals copy"}}));
  auto signed_rep = find_broadcasting(rational_semiring(), b.dom());
  r.values["signed_dimension"] = signed_rep.dimension;
  r.check("signed_copy_unique", signed_rep.unique);
  for (auto& n : in.at("sizes")) {
    std::size_t k = n.get<std::size_t>();
    std::vector<std::string> l;
    for (std::size_t i = 0; i < k; ++i) l.push_back(std::to_string(i));
    auto rep = find_broadcasting(nonneg_rational_semiring(), FinSet::atom(l));
    r.values["nonneg_solutions_" + std::to_string(k)] = rep.solutions.size();
    r.check("nonneg_copy_unique_" + std::to_string(k), rep.unique);
  }
  auto boolean = find_broadcasting(boolean_semiring(), FinSet::atom({"0", "1"}));
  r.values["boolean_solutions_2"] = boolean.solutions.size();
  r.check("boolean_copy_unique_2", boolean.unique);
  return r.done();
}

json pointed_ev_initial(const json& in) {
  Report r;
  std::size_t max_env = in.at("max_env");
  for (auto& n : in.at("sizes")) {
    std::size_t k = n.get<std::size_t>();
    std::string sfx = "_" + std::to_string(k);
    PointedSet X = pointed_range("x", k);
    PointedDilation ev = evaluation(X);
    r.values["self_maps" + sfx] = ev.env.size();
    r.check("ev_dilation" + sfx, verify_pointed_dilation(ev));
    Verdict init = verify_pointed_initial(ev, max_env);
    r.check("ev_initial" + sfx, init);
    std::size_t bad_trivial = init.failed() ? init.witness["unfactorable_with_trivial_env_marginal"].get<std::size_t>() : 0;
    r.check("ev_initial_among_trivial_env_marginals" + sfx,
            flag(bad_trivial == 0, json{{"unfactorable", bad_trivial}}));
  }
  return r.done();
}

json pointed_discard_creative(const json& in) {
  Report r;
  for (auto& n : in.at("sizes")) {
    std::size_t k = n.get<std::size_t>();
    std::string sfx = "_" + std::to_string(k);
    PointedSet X = pointed_range("x", k);
    PointedDilation ev = evaluation(X);
    PointedMap c = marginal_env(ev);
    r.check("env_marginal_constant" + sfx,
            flag(c == constant_basepoint(c.dom, c.cod), json{{"marginal", pointed_map_json(c)}}));
    // ev read as a dilation of c, with X as the environment
    std::vector<std::size_t> fn;
    for (std::size_t phi = 0; phi < ev.env.size(); ++phi)
      for (std::size_t x = 0; x < X.size(); ++x) fn.push_back(ev.total.fn[x * ev.env.size() + phi]);
    PointedDilation swapped{c, X, PointedMap{X, ev.env * X, fn}};
    r.check("swapped_ev_dilation" + sfx, verify_pointed_dilation(swapped));
    r.check("noncreative" + sfx, pointed_noncreative_instance(swapped));
  }
  return r.done();
}

json ioc_initial(const json& in) {
  Report r;
  SearchOptions opt{in.at("max_env"), in.at("seed"), in.at("samples"), 1u << 16};
  for (auto& [name, kj] : in.at("kernels").items()) {
    Kernel p = kernel_from_json(kj);
    Dilation ioc = make_ioc(p);
    r.check("initial:" + name, verify_initial(ioc, opt));
    auto fam = dilation_family(p, opt);
    Verdict med = Verdict::holds();
    for (std::size_t i = 0; i < fam.members.size() && med.ok(); ++i) {
      const Dilation& d = fam.members[i];
      // an empty environment has nothing to condition, the mediator is discard
      Kernel f = d.env().arity() == 0 ? discard(p.semiring(), ioc.env()) : conditional(d.total(), p.cod().arity());
      if (!is_dilation_morphism(ioc, fam.members[i], f))
        med = Verdict::fails(json{{"origin", fam.origin[i]}, {"dilation", kernel_json(fam.members[i].total())}});
    }
    med.note(std::to_string(fam.members.size()) + " dilations");
    r.check("mediator_is_conditional:" + name, med);
  }
  return r.done();
}

struct Entry {
  std::string id;
  std::vector<std::string> tags;
  std::function<json(const json&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"finstoch_pm_dmi", {"positivity", "signed", "dilation"}, finstoch_pm_dmi},
      {"rank1_positivity", {"positivity", "signed"}, rank1_positivity},
      {"quantale_z2i", {"semiring", "causality", "ideal"}, quantale_z2i},
      {"lattice_causal", {"semiring", "causality", "lattice"}, lattice_causal},
      {"convex_decomposition", {"dilation", "kernel"}, convex_decomposition},
      {"dileq_vs_ase", {"dilation", "dileq"}, dileq_vs_ase},
      {"broadcasting_pm", {"dilation", "broadcasting", "signed"}, broadcasting_pm},
      {"pointed_ev_initial", {"pointed", "initial"}, pointed_ev_initial},
      {"pointed_discard_creative", {"pointed", "noncreative"}, pointed_discard_creative},
      {"ioc_initial", {"dilation", "initial"}, ioc_initial},
  };
  return r;
}

const Entry& find(const std::string& id) {
  for (auto& e : registry())
    if (e.id == id) return e;
  throw UsageError("unknown case " + id);
}

std::string show(const json& j) { return j.is_string() ? "\"" + j.get<std::string>() + "\"" : j.dump(); }

}  // namespace

std::string default_cases_dir() { return MARKOV_CASES_DIR; }

std::vector<std::string> case_ids() {
  std::vector<std::string> out;
  for (auto& e : registry()) out.push_back(e.id);
  return out;
}

std::vector<std::string> case_tags(const std::string& id) { return find(id).tags; }

bool subset_match(const json& expected, const json& actual, const std::string& path,
                  std::vector<std::string>& mismatches) {
  std::size_t before = mismatches.size();
  if (expected.is_object()) {
    if (!actual.is_object()) {
      mismatches.push_back(path + ": expected an object, got " + show(actual));
      return false;
    }
    for (auto& [k, v] : expected.items()) {
      std::string p = path.empty() ? k : path + "." + k;
      if (!actual.contains(k)) mismatches.push_back(p + ": missing");
      else subset_match(v, actual.at(k), p, mismatches);
    }
  } else if (expected.is_array()) {
    if (!actual.is_array()) {
      mismatches.push_back(path + ": expected a list, got " + show(actual));
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      bool found = false;
      for (auto& a : actual) {
        std::vector<std::string> scratch;
        if (subset_match(expected[i], a, path, scratch)) {
          found = true;
          break;
        }
      }
      if (!found) mismatches.push_back(path + "[" + std::to_string(i) + "]: no matching element for " + expected[i].dump());
    }
  } else if (expected != actual) {
    mismatches.push_back(path + ": expected " + show(expected) + ", got " + show(actual));
  }
  return mismatches.size() == before;
}

CaseResult run_case(const std::string& id, const std::string& dir) {
  const Entry& e = find(id);
  json fixture = read_json_file(dir + "/" + id + ".json");
  if (fixture.value("id", "") != id) throw UsageError("fixture " + id + ".json carries a different id");
  CaseResult r;
  r.id = id;
  r.tags = e.tags;
  r.expected = fixture.at("expected");
  r.actual = e.run(fixture.at("inputs"));
  r.match = subset_match(r.expected, r.actual, "", r.mismatches);
  return r;
}

std::vector<CaseResult> run_all(const std::optional<std::string>& tag, const std::string& dir) {
  std::vector<CaseResult> out;
  for (auto& e : registry()) {
    if (tag && std::find(e.tags.begin(), e.tags.end(), *tag) == e.tags.end()) continue;
    out.push_back(run_case(e.id, dir));
  }
  return out;
}

json to_json(const CaseResult& r) {
  return json{{"case_id", r.id}, {"tags", r.tags},         {"match", r.match},
              {"mismatches", r.mismatches}, {"expected", r.expected}, {"actual", r.actual}};
}

}  // namespace markov
