#include "markov/axioms.hpp"

#include "markov/errors.hpp"
#include "markov/properties.hpp"

namespace markov {

namespace {

void same_semiring(const Kernel& a, const Kernel& b) {
  if (a.semiring() != b.semiring()) throw UsageError("kernels over different semirings");
}

void cross(AxiomReport& r, std::string name, Verdict v, const Verdict& against) {
  if (against.vacuous || v.vacuous) {
    r.cross_checks.emplace_back(std::move(name), std::move(v));
    return;
  }
  if (v.status != against.status && v.status != Status::UnknownUpTo && against.status != Status::UnknownUpTo) {
    r.consistent = false;
    v.note("disagrees with " + r.axiom);
  }
  r.cross_checks.emplace_back(std::move(name), std::move(v));
}

}  // namespace

json to_json(const AxiomReport& r) {
  json j = json::object();
  j["axiom"] = r.axiom;
  j["inputs"] = r.inputs;
  json vj = to_json(r.verdict);
  for (auto& [k, v] : vj.items()) j[k] = v;
  json cc = json::array();
  for (auto& [name, v] : r.cross_checks) {
    json c{{"formulation", name}};
    json vj2 = to_json(v);
    for (auto& [k, x] : vj2.items()) c[k] = x;
    cc.push_back(c);
  }
  j["cross_checks"] = cc;
  j["consistent"] = r.consistent;
  if (!r.stats.is_null()) j["stats"] = r.stats;
  return j;
}

AxiomReport check_positivity_instance(const Kernel& f, const Kernel& g) {
  same_semiring(f, g);
  if (f.cod() != g.dom()) throw UsageError("positivity: g does not start where f ends");
  AxiomReport rep{"positivity", {"f", "g"}, Verdict::holds(), {}, true, nullptr};
  const Semiring& R = f.R();
  Kernel h = compose(g, f);
  if (!is_deterministic(h).ok()) {
    rep.verdict = Verdict::vacuous_holds("g f is not deterministic");
    return rep;
  }
  json violations = json::array();
  for (std::size_t a = 0; a < f.dom().size(); ++a)
    for (std::size_t x = 0; x < f.cod().size(); ++x)
      for (std::size_t y = 0; y < g.cod().size(); ++y) {
        Value lhs = R.mul(g(y, x), f(x, a));
        Value rhs = R.mul(h(y, a), f(x, a));
        if (lhs != rhs)
          violations.push_back({{"a", f.dom().label(a)},
                                {"x", f.cod().label(x)},
                                {"y", g.cod().label(y)},
                                {"lhs", lhs.str()},
                                {"rhs", rhs.str()}});
      }
  if (!violations.empty()) {
    json w = violations.front();
    w["violations"] = violations;
    rep.verdict = Verdict::fails(w);
  }
  // the same statement as DMI and as determinism in Y of (g (x) id) copy f
  auto S = f.semiring();
  Kernel pi = compose(tensor(g, identity(S, f.cod())), compose(copy(S, f.cod()), f));
  Dilation d(h, pi);
  cross(rep, "dmi", check_dmi_instance(d), rep.verdict);
  cross(rep, "deterministic-in-output", is_deterministic_in(pi, g.cod().arity()), rep.verdict);
  return rep;
}

AxiomReport check_pes_instance(const Kernel& h1, const Kernel& h2, const Kernel& p, const SearchOptions& opt) {
  same_semiring(h1, h2);
  same_semiring(h1, p);
  if (h1.dom() != h2.dom() || h1.cod() != h2.cod() || p.cod() != h1.dom())
    throw UsageError("pes: need h1, h2 : X -> Y and p : A -> X");
  AxiomReport rep{"pes", {"h1", "h2", "p"}, Verdict::holds(), {}, true, nullptr};
  if (compose(h1, p) != compose(h2, p)) {
    rep.verdict = Verdict::vacuous_holds("h1 p differs from h2 p");
    return rep;
  }
  rep.verdict = dilational_equal(h1, h2, p, opt);
  Verdict ase = as_equal(h1, h2, p);
  // dilational equality implies almost sure equality, never the other way round
  if (rep.verdict.ok() && !ase.ok()) {
    rep.consistent = false;
    ase.note("dilationally equal but not almost surely equal");
  }
  rep.cross_checks.emplace_back("almost-sure", std::move(ase));
  return rep;
}

AxiomReport check_relative_positivity_instance(const Kernel& f, const Kernel& g, const Kernel& p) {
  same_semiring(f, g);
  same_semiring(f, p);
  if (f.cod() != g.dom() || p.cod() != f.dom()) throw UsageError("relpos: need p : T -> A, f : A -> X, g : X -> Y");
  AxiomReport rep{"relpos", {"f", "g", "p"}, Verdict::holds(), {}, true, nullptr};
  auto S = f.semiring();
  Kernel h = compose(g, f);
  Kernel cp_h = compose(copy(S, h.cod()), h);
  Kernel hh = compose(tensor(h, h), copy(S, h.dom()));
  if (!as_equal(cp_h, hh, p).ok()) {
    rep.verdict = Verdict::vacuous_holds("g f is not p-almost surely deterministic");
  } else {
    Kernel lhs = compose(tensor(g, identity(S, f.cod())), compose(copy(S, f.cod()), f));
    Kernel rhs = compose(tensor(h, f), copy(S, f.dom()));
    rep.verdict = as_equal(lhs, rhs, p);
  }
  if (p == identity(S, f.dom())) {
    Verdict plain = check_positivity_instance(f, g).verdict;
    if (plain.status != rep.verdict.status || plain.vacuous != rep.verdict.vacuous) {
      rep.consistent = false;
      plain.note("differs from the relative check at p = id");
    }
    rep.cross_checks.emplace_back("positivity (p = id)", std::move(plain));
  }
  return rep;
}

namespace {

FinSet sized(const std::string& prefix, Rng& rng, std::size_t bound) { return range_set(prefix, 1 + draw(rng, bound)); }

struct Tally {
  std::size_t vacuous = 0, held = 0, failed = 0, disagreements = 0, theory_violations = 0;
  json first_failure, first_disagreement;
};

void record(Tally& t, const std::vector<std::pair<std::string, Verdict>>& forms, bool zsf, std::size_t sample) {
  const Verdict& head = forms.front().second;
  if (head.vacuous) {
    ++t.vacuous;
    return;
  }
  bool agree = true;
  for (auto& [n, v] : forms)
    if (v.vacuous || v.status != head.status) agree = false;
  if (!agree) {
    ++t.disagreements;
    if (t.first_disagreement.is_null()) {
      json w{{"sample", sample}};
      for (auto& [n, v] : forms) w[n] = to_json(v);
      t.first_disagreement = w;
    }
  }
  if (head.failed()) {
    ++t.failed;
    if (zsf) ++t.theory_violations;
    if (t.first_failure.is_null()) t.first_failure = json{{"sample", sample}, {"witness", head.witness}};
  } else {
    ++t.held;
  }
}

}  // namespace

AxiomReport audit_equivalences(SemiringPtr S, const AuditOptions& opt) {
  const Semiring& R = *S;
  AxiomReport rep{"audit", {S->name()}, Verdict::holds(), {}, true, nullptr};
  Verdict zsf_v = check_zerosumfree(R, R.elements() ? Strategy::exhaustive() : Strategy::certified());
  bool zsf = zsf_v.ok();
  Rng rng(opt.seed);
  Tally t;
  std::size_t nb = std::max<std::size_t>(opt.size_bound, 1);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    std::vector<std::pair<std::string, Verdict>> forms;
    switch (s % 3) {
      case 0: {
        // random dilation of a random function
        FinSet A = sized("a", rng, nb), X = sized("x", rng, nb), E = sized("e", rng, nb);
        DetFunction phi{A, X, {}};
        for (std::size_t a = 0; a < A.size(); ++a) phi.map.push_back(draw(rng, X.size()));
        Kernel p = delta(S, phi);
        std::vector<std::vector<Value>> parts;
        for (std::size_t x = 0; x < X.size(); ++x)
          for (std::size_t a = 0; a < A.size(); ++a) parts.push_back(R.split(p(x, a), E.size(), rng));
        Kernel pi = Kernel::build(S, A, X * E, [&](std::size_t xe, std::size_t a) {
          return parts[(xe / E.size()) * A.size() + a][xe % E.size()];
        });
        Kernel proj = marginalize(identity(S, X * E), {0});
        forms.emplace_back("dmi", check_dmi_instance(Dilation(p, pi)));
        forms.emplace_back("deterministic-in-x", is_deterministic_in(pi, 1));
        forms.emplace_back("positivity", check_positivity_instance(pi, proj).verdict);
        break;
      }
      case 1: {
        // deterministic g, f splitting each fiber's mass so that g f is deterministic
        FinSet A = sized("a", rng, nb), X = sized("x", rng, nb), Y = sized("y", rng, nb);
        DetFunction ell{X, Y, {}};
        for (std::size_t x = 0; x < X.size(); ++x) ell.map.push_back(draw(rng, Y.size()));
        std::vector<std::vector<std::size_t>> fiber(Y.size());
        for (std::size_t x = 0; x < X.size(); ++x) fiber[ell.map[x]].push_back(x);
        std::vector<std::vector<Value>> col(A.size(), std::vector<Value>(X.size(), R.zero()));
        for (std::size_t a = 0; a < A.size(); ++a) {
          std::size_t target = ell.map[draw(rng, X.size())];
          for (std::size_t y = 0; y < Y.size(); ++y) {
            if (fiber[y].empty()) continue;
            auto parts = R.split(y == target ? R.one() : R.zero(), fiber[y].size(), rng);
            for (std::size_t k = 0; k < fiber[y].size(); ++k) col[a][fiber[y][k]] = parts[k];
          }
        }
        Kernel f = Kernel::build(S, A, X, [&](std::size_t x, std::size_t a) { return col[a][x]; });
        auto r = check_positivity_instance(f, delta(S, ell));
        forms.emplace_back("positivity", r.verdict);
        for (auto& c : r.cross_checks) forms.push_back(c);
        break;
      }
      default: {
        FinSet A = sized("a", rng, nb), X = sized("x", rng, nb), Y = sized("y", rng, nb);
        auto r = check_positivity_instance(random_kernel(S, A, X, rng), random_kernel(S, X, Y, rng));
        forms.emplace_back("positivity", r.verdict);
        for (auto& c : r.cross_checks) forms.push_back(c);
        break;
      }
    }
    record(t, forms, zsf, s);
  }
  rep.stats = json{{"semiring", S->name()},
                   {"samples", opt.samples},
                   {"seed", opt.seed},
                   {"zerosumfree", zsf},
                   {"vacuous", t.vacuous},
                   {"held", t.held},
                   {"failed", t.failed},
                   {"disagreements", t.disagreements},
                   {"theory_violations", t.theory_violations}};
  if (!t.first_failure.is_null()) rep.stats["first_failure"] = t.first_failure;
  rep.cross_checks.emplace_back("zerosumfree", zsf_v);
  if (t.disagreements || t.theory_violations) {
    rep.consistent = false;
    json w{{"disagreements", t.disagreements}, {"theory_violations", t.theory_violations}};
    if (!t.first_disagreement.is_null()) w["first_disagreement"] = t.first_disagreement;
    if (t.theory_violations) w["first_failure"] = t.first_failure;
    rep.verdict = Verdict::fails(w, "bound:" + std::to_string(opt.samples));
  } else {
    rep.verdict = Verdict::holds("bound:" + std::to_string(opt.samples));
    if (t.failed) rep.verdict.note(std::to_string(t.failed) + " instances fail all formulations alike");
  }
  return rep;
}

AxiomReport audit_meta_implication(const std::vector<std::string>& names, Strategy st) {
  AxiomReport rep{"meta-implication", names, Verdict::holds(), {}, true, nullptr};
  json refuted = json::array(), undecided = json::array(), table = json::object();
  for (auto& n : names) {
    SemiringPtr S = builtin(n);
    Verdict cz = check_zerosumfree(*S, st);
    Verdict cc = check_causality_criterion(*S, st);
    table[n] = json{{"causality", summary(cc)}, {"zerosumfree", summary(cz)}};
    if (cc.ok() && cz.failed() && !rep.verdict.failed())
      rep.verdict = Verdict::fails(json{{"semiring", n}, {"zerosumfree", to_json(cz)}});
    if (cz.ok() && cc.failed()) refuted.push_back(n);
    if (cz.status == Status::UnknownUpTo || cc.status == Status::UnknownUpTo) undecided.push_back(n);
    rep.cross_checks.emplace_back(n + ": causality", std::move(cc));
    rep.cross_checks.emplace_back(n + ": zerosumfree", std::move(cz));
  }
  rep.stats = json{{"table", table}, {"converse_refuted_by", refuted}, {"undecided", undecided}};
  return rep;
}

std::size_t rational_rank(const Kernel& f) {
  const Semiring& R = f.R();
  if (!R.rational_kind()) throw UnsupportedError("rank needs a rational semiring");
  std::size_t rows = f.cod().size(), cols = f.dom().size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (std::size_t x = 0; x < rows; ++x)
    for (std::size_t a = 0; a < cols; ++a) m[x][a] = R.as_rational(f(x, a));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c] != 0) {
        Rational k = m[r][c] / m[rank][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
      }
    ++rank;
  }
  return rank;
}

bool is_stochastic(const Kernel& f) {
  const Semiring& R = f.R();
  if (!R.rational_kind()) throw UnsupportedError("stochasticity needs a rational semiring");
  for (auto& v : f.entries())
    if (R.as_rational(v) < 0) return false;
  return true;
}

}  // namespace markov
