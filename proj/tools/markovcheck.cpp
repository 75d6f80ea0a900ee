#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "markov/axioms.hpp"
#include "markov/cases.hpp"
#include "markov/dilation.hpp"
#include "markov/errors.hpp"
#include "markov/io.hpp"
#include "markov/pointed.hpp"
#include "markov/properties.hpp"
#include "markov/report.hpp"

using namespace markov;

namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::size_t samples = 0;
  CLI::Option* samples_opt = nullptr;
  std::size_t max_env = 3;

  bool seeded() const { return seed_opt->count() > 0; }
  std::size_t samples_or(std::size_t def) const { return samples_opt->count() ? samples : def; }

  // random dilations only when a seed was given, so unseeded runs are reproducible by construction
  SearchOptions search() const {
    SearchOptions o;
    o.max_env = max_env;
    o.seed = seed;
    o.samples = seeded() ? samples_or(200) : 0;
    return o;
  }
};

ResultItem verdict_item(const std::string& name, const Verdict& v) { return {name, to_json(v), ""}; }
ResultItem report_item(const std::string& name, const AxiomReport& r) { return {name, to_json(r), ""}; }
ResultItem kernel_item(const std::string& name, const Kernel& k) { return {name, kernel_json(k), k.str()}; }

Strategy strategy_from(const std::string& mode, const Globals& g) {
  Strategy st;
  if (mode == "exhaustive") st = Strategy::exhaustive();
  else if (mode == "certified") st = Strategy::certified();
  else if (mode == "sampled") {
    if (!g.seeded()) throw UsageError("--strategy sampled needs --seed");
    st = Strategy::sampled(g.seed, g.samples_or(10000));
  } else {
    st.seed = g.seed;
    st.samples = g.seeded() ? g.samples_or(10000) : 0;
  }
  return st;
}

DilationKind kind_from(const std::string& k) {
  if (k == "bloom") return DilationKind::Bloom;
  if (k == "ioc") return DilationKind::Ioc;
  return DilationKind::OutputCopy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"markovcheck: exact checks for Markov categories of semiring-valued kernels"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  g.seed_opt = app.add_option("--seed", g.seed, "seed for sampled searches (none: no sampling)");
  g.samples_opt = app.add_option("--samples", g.samples, "sample count for seeded searches");
  app.add_option("--max-env", g.max_env, "environment size bound for dilation searches")->check(CLI::Range(1, 8));

  std::string command;
  std::function<std::vector<ResultItem>()> job;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    std::string full = parent->get_name() + " " + name;
    s->parse_complete_callback([&command, full] { command = full; });
    return s;
  };

  // semiring
  CLI::App* semi = app.add_subcommand("semiring", "semiring properties");
  semi->require_subcommand(1);
  std::string sel, property = "all", strategy = "auto", element;
  CLI::App* sc = leaf(semi, "check", "check axioms and properties of a builtin or file semiring");
  sc->add_option("semiring", sel, "builtin name or path")->required();
  sc->add_option("--property", property)->check(
      CLI::IsMember({"zerosumfree", "entire", "causality", "axioms", "all"}));
  sc->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "exhaustive", "sampled", "certified"}));
  sc->callback([&] {
    job = [&] {
      SemiringPtr R = load_semiring(sel);
      Strategy st = strategy_from(strategy, g);
      std::vector<ResultItem> out;
      if (property == "axioms" || property == "all") out.push_back(verdict_item("axioms", check_semiring_axioms(*R, st)));
      if (property == "zerosumfree" || property == "all")
        out.push_back(verdict_item("zerosumfree", check_zerosumfree(*R, st)));
      if (property == "entire" || property == "all") out.push_back(verdict_item("entire", check_entire(*R, st)));
      if (property == "causality" || property == "all")
        out.push_back(verdict_item("causality", check_causality_criterion(*R, st)));
      return out;
    };
  });
  CLI::App* scomp = leaf(semi, "complement", "complement of an element (ideals)");
  scomp->add_option("semiring", sel)->required();
  scomp->add_option("element", element)->required();
  scomp->callback([&] {
    job = [&] {
      SemiringPtr R = load_semiring(sel);
      auto c = R->complement(R->parse(element));
      json body = c ? json{{"element", element}, {"complement", c->str()}} : json{{"element", element}, {"complement", nullptr}};
      return std::vector<ResultItem>{{"complement", body, c ? element + " has complement " + c->str() : element + " has no complement"}};
    };
  });
  leaf(semi, "list", "builtin semirings")->callback([&] {
    job = [&] {
      std::vector<ResultItem> out;
      for (auto& n : builtin_names()) out.push_back({n, json{{"kind", kind_name(builtin(n)->kind())}}, kind_name(builtin(n)->kind())});
      return out;
    };
  });

  // kernel
  CLI::App* ker = app.add_subcommand("kernel", "kernel operations");
  ker->require_subcommand(1);
  std::string f_path, g_path, p_path, h1_path, h2_path, total_path, b_path, kind = "bloom";
  std::vector<std::size_t> keep;
  std::size_t nx = 1;
  CLI::App* kc = leaf(ker, "compose", "g after f");
  kc->add_option("--f", f_path)->required();
  kc->add_option("--g", g_path)->required();
  kc->callback([&] { job = [&] { return std::vector<ResultItem>{kernel_item("compose", compose(load_kernel(g_path), load_kernel(f_path)))}; }; });
  CLI::App* kt = leaf(ker, "tensor", "f tensor g");
  kt->add_option("--f", f_path)->required();
  kt->add_option("--g", g_path)->required();
  kt->callback([&] { job = [&] { return std::vector<ResultItem>{kernel_item("tensor", tensor(load_kernel(f_path), load_kernel(g_path)))}; }; });
  CLI::App* km = leaf(ker, "marginal", "keep some codomain factors");
  km->add_option("--f", f_path)->required();
  km->add_option("--keep", keep, "factor indices, comma separated")->delimiter(',')->required();
  km->callback([&] { job = [&] { return std::vector<ResultItem>{kernel_item("marginal", marginalize(load_kernel(f_path), keep))}; }; });
  CLI::App* kd = leaf(ker, "deterministic", "is f deterministic");
  kd->add_option("--f", f_path)->required();
  kd->callback([&] { job = [&] { return std::vector<ResultItem>{verdict_item("deterministic", is_deterministic(load_kernel(f_path)))}; }; });
  CLI::App* kcond = leaf(ker, "conditional", "conditional of f on its first nx factors");
  kcond->add_option("--f", f_path)->required();
  kcond->add_option("--nx", nx);
  kcond->callback([&] { job = [&] { return std::vector<ResultItem>{kernel_item("conditional", conditional(load_kernel(f_path), nx))}; }; });

  // axiom
  CLI::App* ax = app.add_subcommand("axiom", "positivity-style axioms");
  ax->require_subcommand(1);
  CLI::App* ap = leaf(ax, "positivity", "positivity for the pair f, g");
  ap->add_option("--f", f_path)->required();
  ap->add_option("--g", g_path)->required();
  ap->callback([&] { job = [&] { return std::vector<ResultItem>{report_item("positivity", check_positivity_instance(load_kernel(f_path), load_kernel(g_path)))}; }; });
  CLI::App* apes = leaf(ax, "pes", "h1 p = h2 p implies dilational equality");
  apes->add_option("--h1", h1_path)->required();
  apes->add_option("--h2", h2_path)->required();
  apes->add_option("--p", p_path)->required();
  apes->callback([&] {
    job = [&] {
      return std::vector<ResultItem>{report_item("pes", check_pes_instance(load_kernel(h1_path), load_kernel(h2_path), load_kernel(p_path), g.search()))};
    };
  });
  CLI::App* arp = leaf(ax, "relpos", "positivity relative to p");
  arp->add_option("--f", f_path)->required();
  arp->add_option("--g", g_path)->required();
  arp->add_option("--p", p_path)->required();
  arp->callback([&] {
    job = [&] {
      return std::vector<ResultItem>{report_item("relpos", check_relative_positivity_instance(load_kernel(f_path), load_kernel(g_path), load_kernel(p_path)))};
    };
  });
  CLI::App* admi = leaf(ax, "dmi", "deterministic marginal independence for a dilation");
  admi->add_option("--total", total_path)->required();
  admi->add_option("--p", p_path)->required();
  admi->callback([&] {
    job = [&] {
      Kernel p = load_kernel(p_path);
      return std::vector<ResultItem>{verdict_item("dmi", check_dmi_instance(Dilation(p, load_kernel(total_path, p.semiring()))))};
    };
  });
  std::string audit_semiring = "rational";
  std::size_t size_bound = 3;
  CLI::App* aa = leaf(ax, "audit", "sample instances and compare the equivalent formulations");
  aa->add_option("--semiring", audit_semiring);
  aa->add_option("--size", size_bound)->check(CLI::Range(1, 4));
  aa->callback([&] {
    job = [&] {
      if (!g.seeded()) throw UsageError("axiom audit samples instances and needs --seed");
      AuditOptions o{size_bound, g.seed, g.samples_or(500)};
      return std::vector<ResultItem>{report_item("audit " + audit_semiring, audit_equivalences(load_semiring(audit_semiring), o))};
    };
  });
  std::vector<std::string> meta_names;
  CLI::App* ameta = leaf(ax, "meta", "causality criterion against zero-sum-freeness");
  ameta->add_option("--semirings", meta_names)->delimiter(',');
  ameta->callback([&] {
    job = [&] {
      auto names = meta_names.empty() ? builtin_names() : meta_names;
      return std::vector<ResultItem>{report_item("meta", audit_meta_implication(names, strategy_from("auto", g)))};
    };
  });

  // dilation
  CLI::App* dil = app.add_subcommand("dilation", "dilations and their universal properties");
  dil->require_subcommand(1);
  CLI::App* dv = leaf(dil, "verify", "is total a dilation of p");
  dv->add_option("--total", total_path)->required();
  dv->add_option("--p", p_path)->required();
  dv->callback([&] {
    job = [&] {
      Kernel p = load_kernel(p_path);
      return std::vector<ResultItem>{verdict_item("dilation", verify_dilation(load_kernel(total_path, p.semiring()), p))};
    };
  });
  CLI::App* di = leaf(dil, "initial", "bounded initiality check of a constructed or given dilation");
  di->add_option("--p", p_path)->required();
  di->add_option("--kind", kind)->check(CLI::IsMember({"bloom", "ioc", "output-copy"}));
  di->add_option("--total", total_path, "candidate total kernel (overrides --kind)");
  di->callback([&] {
    job = [&] {
      Kernel p = load_kernel(p_path);
      Dilation cand = total_path.empty() ? make_dilation(kind_from(kind), p) : Dilation(p, load_kernel(total_path, p.semiring()));
      return std::vector<ResultItem>{verdict_item("initial " + (total_path.empty() ? kind : total_path), verify_initial(cand, g.search()))};
    };
  });
  CLI::App* dn = leaf(dil, "noncreative", "every dilation of p arises from one of the identity");
  dn->add_option("--p", p_path)->required();
  dn->callback([&] { job = [&] { return std::vector<ResultItem>{verdict_item("noncreative", is_noncreative(load_kernel(p_path), g.search()))}; }; });
  std::string b_semiring = "rational";
  std::size_t b_size = 2;
  CLI::App* db = leaf(dil, "broadcasting", "broadcasting morphisms on an n-element set");
  db->add_option("--semiring", b_semiring);
  db->add_option("--size", b_size)->check(CLI::Range(1, 4));
  db->add_option("--b", b_path, "check one kernel instead of searching");
  db->callback([&] {
    job = [&] {
      if (!b_path.empty()) return std::vector<ResultItem>{verdict_item("broadcasting", is_broadcasting(load_kernel(b_path)))};
      BroadcastReport r = find_broadcasting(load_semiring(b_semiring), range_set("x", b_size), g.search());
      json sols = json::array();
      for (auto& k : r.solutions) sols.push_back(kernel_json(k));
      json body = to_json(r.unique);
      body["dimension"] = r.dimension;
      body["solutions"] = sols;
      return std::vector<ResultItem>{{"copy is the only broadcasting", body, ""}};
    };
  });
  CLI::App* dq = leaf(dil, "dileq", "dilational equality of f and g along p");
  dq->add_option("--f", f_path)->required();
  dq->add_option("--g", g_path)->required();
  dq->add_option("--p", p_path)->required();
  dq->callback([&] {
    job = [&] {
      return std::vector<ResultItem>{verdict_item("dileq", dilational_equal(load_kernel(f_path), load_kernel(g_path), load_kernel(p_path), g.search()))};
    };
  });
  std::size_t pointed_size = 2;
  CLI::App* dpe = leaf(dil, "pointed-ev", "initiality of evaluation among pointed-set dilations of the identity");
  dpe->add_option("--size", pointed_size)->check(CLI::Range(2, 3));
  dpe->callback([&] {
    job = [&] {
      return std::vector<ResultItem>{verdict_item("ev initial", verify_pointed_initial(evaluation(pointed_range("x", pointed_size)), g.max_env))};
    };
  });

  // repro
  CLI::App* rep = app.add_subcommand("repro", "rerun frozen cases");
  std::string case_id, tag, cases_dir = default_cases_dir();
  bool all = false;
  rep->add_option("case", case_id);
  rep->add_flag("--all", all);
  rep->add_option("--tag", tag);
  rep->add_option("--cases-dir", cases_dir);
  rep->callback([&] {
    command = "repro";
    job = [&] {
      std::vector<CaseResult> rs;
      if (!case_id.empty()) rs.push_back(run_case(case_id, cases_dir));
      else if (all || !tag.empty()) rs = run_all(tag.empty() ? std::nullopt : std::optional<std::string>(tag), cases_dir);
      else throw UsageError("repro needs a case id, --all or --tag");
      std::vector<ResultItem> out;
      for (auto& r : rs) out.push_back({r.id, to_json(r), ""});
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), 2);
  }

  try {
    std::vector<ResultItem> results = job();
    bool color = g.format == "text" && isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
    std::cout << render_report(results, g.format == "json" ? Format::Json : Format::Text, command, color);
    for (auto& r : results)
      if (item_failed(r)) return 1;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  }
}
