#include "markov/dilation.hpp"

#include "markov/errors.hpp"
#include "markov/properties.hpp"
#include "markov/solve.hpp"

namespace markov {

namespace {

std::vector<std::size_t> iota_from(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t k = lo; k < hi; ++k) v.push_back(k);
  return v;
}

void check_shape(const Kernel& total, const Kernel& base) {
  if (total.semiring() != base.semiring()) throw UsageError("dilation and base over different semirings");
  if (total.dom() != base.dom()) throw UsageError("dilation and base have different domains");
  std::size_t nx = base.cod().arity();
  if (total.cod().arity() < nx || total.cod().sub(iota_from(0, nx)) != base.cod())
    throw UsageError("dilation codomain does not start with " + base.cod().str());
}

FinSet env_of(const Kernel& total, std::size_t nx) {
  return total.cod().sub(iota_from(nx, total.cod().arity()));
}

bool causal_certified(const Semiring& R) {
  if (R.certificates().causal) return true;
  if (R.elements()) return check_causality_criterion(R, Strategy::exhaustive()).ok();
  return false;
}

bool positive_certified(const Semiring& R) {
  auto s = Strategy::certified();
  if (R.elements()) s = Strategy::exhaustive();
  return check_entire(R, s).ok() && check_zerosumfree(R, s).ok();
}

json at_json(std::initializer_list<std::pair<const char*, std::string>> kv) {
  json j = json::object();
  for (auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

Dilation::Dilation(Kernel base, Kernel total) : base_(std::move(base)), total_(std::move(total)) {
  check_shape(total_, base_);
  env_ = env_of(total_, base_.cod().arity());
  auto v = verify_dilation(total_, base_);
  if (!v.ok()) throw UsageError("not a dilation: " + v.witness.dump());
}

Kernel Dilation::env_marginal() const {
  return marginalize(total_, iota_from(nx(), total_.cod().arity()));
}

Verdict verify_dilation(const Kernel& total, const Kernel& base) {
  check_shape(total, base);
  const Semiring& R = base.R();
  std::size_t ne = env_of(total, base.cod().arity()).size();
  for (std::size_t a = 0; a < base.dom().size(); ++a)
    for (std::size_t x = 0; x < base.cod().size(); ++x) {
      Value s = R.zero();
      for (std::size_t e = 0; e < ne; ++e) s = R.add(s, total(x * ne + e, a));
      if (s != base(x, a))
        return Verdict::fails(at_json({{"a", base.dom().label(a)},
                                       {"x", base.cod().label(x)},
                                       {"marginal", s.str()},
                                       {"base", base(x, a).str()}}));
    }
  return Verdict::holds();
}

Dilation make_bloom(const Kernel& p) {
  auto R = p.semiring();
  return Dilation(p, compose(tensor(p, identity(R, p.dom())), copy(R, p.dom())));
}

Dilation make_ioc(const Kernel& p) {
  auto R = p.semiring();
  Kernel bloom = compose(tensor(p, identity(R, p.dom())), copy(R, p.dom()));
  return Dilation(p, compose(tensor(copy(R, p.cod()), identity(R, p.dom())), bloom));
}

Dilation make_output_copy(const Kernel& p) { return Dilation(p, compose(copy(p.semiring(), p.cod()), p)); }

Dilation make_dilation(DilationKind kind, const Kernel& p) {
  switch (kind) {
    case DilationKind::Bloom: return make_bloom(p);
    case DilationKind::Ioc: return make_ioc(p);
    case DilationKind::OutputCopy: return make_output_copy(p);
  }
  throw UsageError("unknown dilation kind");
}

Dilation make_from_decomposition(const Kernel& p, const Kernel& m, const Kernel& k) {
  if (m.cod() != k.dom() || m.dom() != p.dom() || k.cod() != p.cod())
    throw UsageError("decomposition has the wrong shape");
  if (compose(k, m) != p) throw UsageError("decomposition does not compose to p");
  auto R = p.semiring();
  return Dilation(p, compose(tensor(k, identity(R, m.cod())), compose(copy(R, m.cod()), m)));
}

Verdict check_dmi_instance(const Dilation& d) {
  const Kernel& p = d.base();
  if (!is_deterministic(p).ok()) throw UsageError("check_dmi_instance needs a deterministic base");
  const Semiring& R = p.R();
  Kernel pe = d.env_marginal();
  std::size_t ne = d.env().size();
  // off-support rows first: any mass there is a direct violation
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t a = 0; a < p.dom().size(); ++a)
      for (std::size_t x = 0; x < p.cod().size(); ++x) {
        if (R.is_zero(p(x, a)) != (pass == 0)) continue;
        for (std::size_t e = 0; e < ne; ++e) {
          const Value& lhs = d.total()(x * ne + e, a);
          Value rhs = R.mul(p(x, a), pe(e, a));
          if (lhs != rhs)
            return Verdict::fails(at_json({{"a", p.dom().label(a)},
                                           {"x", p.cod().label(x)},
                                           {"e", d.env().label(e)},
                                           {"lhs", lhs.str()},
                                           {"rhs", rhs.str()}}));
        }
      }
  return Verdict::holds();
}

Verdict is_deterministic_in(const Kernel& q, std::size_t nx) {
  if (nx > q.cod().arity()) throw UsageError("is_deterministic_in: X has more factors than the codomain");
  const Semiring& R = q.R();
  std::size_t ns = 1;
  for (std::size_t k = nx; k < q.cod().arity(); ++k) ns *= q.cod().factor(k).size();
  std::size_t nxs = q.cod().size() / ns;
  FinSet X = q.cod().sub(iota_from(0, nx)), E = env_of(q, nx);
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t a = 0; a < q.dom().size(); ++a) {
      std::vector<Value> qx(nxs, R.zero());
      for (std::size_t x = 0; x < nxs; ++x)
        for (std::size_t e = 0; e < ns; ++e) qx[x] = R.add(qx[x], q(x * ns + e, a));
      for (std::size_t x1 = 0; x1 < nxs; ++x1)
        for (std::size_t x2 = 0; x2 < nxs; ++x2) {
          if ((x1 == x2) != (pass == 0)) continue;
          for (std::size_t e = 0; e < ns; ++e) {
            const Value& qv = q(x2 * ns + e, a);
            Value ind = x1 == x2 ? R.one() : R.zero();
            Value lhs = R.mul(ind, qv), rhs = R.mul(qx[x1], qv);
            if (lhs != rhs) {
              json w = at_json({{"a", q.dom().label(a)},
                                {"x1", X.label(x1)},
                                {"x2", X.label(x2)},
                                {"e", E.label(e)},
                                {"lhs", ind.str() + "·" + qv.str()},
                                {"rhs", qx[x1].str() + "·" + qv.str()}});
              w["lhs_value"] = lhs.str();
              w["rhs_value"] = rhs.str();
              return Verdict::fails(w);
            }
          }
        }
    }
  return Verdict::holds();
}

namespace {

// pi = p/2 on two environment points, plus a +-1/2 pair on the first zero-mass output
std::optional<Dilation> cancellation_member(const Kernel& p) {
  const Semiring& R = p.R();
  if (R.kind() != Kind::Rational) return std::nullopt;
  FinSet E = range_set("e", 2);
  std::size_t nx = p.cod().size();
  std::vector<std::optional<std::size_t>> hole(p.dom().size());
  bool any = false;
  for (std::size_t a = 0; a < p.dom().size(); ++a)
    for (std::size_t x = 0; x < nx && !hole[a]; ++x)
      if (R.is_zero(p(x, a))) hole[a] = x, any = true;
  if (!any) return std::nullopt;
  Kernel total = Kernel::build(p.semiring(), p.dom(), p.cod() * E, [&](std::size_t xe, std::size_t a) {
    std::size_t x = xe / 2, e = xe % 2;
    Rational v = R.as_rational(p(x, a)) / 2;
    if (hole[a] && *hole[a] == x) v += e == 0 ? Rational(1, 2) : Rational(-1, 2);
    return R.from_rational(v);
  });
  return Dilation(p, total);
}

// pi(x,e1|a) = p(x|a) + [x = hole], pi(x,e2|a) = -[x = hole]
std::optional<Dilation> unit_cancellation_member(const Kernel& p) {
  const Semiring& R = p.R();
  if (R.kind() != Kind::Rational) return std::nullopt;
  std::vector<std::optional<std::size_t>> hole(p.dom().size());
  bool any = false;
  for (std::size_t a = 0; a < p.dom().size(); ++a)
    for (std::size_t x = 0; x < p.cod().size() && !hole[a]; ++x)
      if (R.is_zero(p(x, a))) hole[a] = x, any = true;
  if (!any) return std::nullopt;
  Kernel total = Kernel::build(p.semiring(), p.dom(), p.cod() * range_set("e", 2), [&](std::size_t xe, std::size_t a) {
    std::size_t x = xe / 2, e = xe % 2;
    bool h = hole[a] && *hole[a] == x;
    if (e == 0) return h ? R.add(p(x, a), R.one()) : p(x, a);
    return h ? R.from_int(-1) : R.zero();
  });
  return Dilation(p, total);
}

Dilation copy_padded(const Dilation& d) {
  auto R = d.base().semiring();
  Kernel pad = tensor(identity(R, d.base().cod()), copy(R, d.env()));
  return Dilation(d.base(), compose(pad, d.total()));
}

Dilation trivial_dilation(const Kernel& p) { return Dilation(p, p); }

}  // namespace

DilationFamily dilation_family(const Kernel& p, const SearchOptions& opt) {
  DilationFamily fam;
  auto add = [&](Dilation d, std::string why) {
    fam.members.push_back(std::move(d));
    fam.origin.push_back(std::move(why));
  };
  add(trivial_dilation(p), "trivial environment");
  add(make_output_copy(p), "output copy");
  add(make_bloom(p), "bloom");
  add(make_ioc(p), "input/output copy");
  add(copy_padded(make_output_copy(p)), "copy-padded output copy");
  add(copy_padded(make_bloom(p)), "copy-padded bloom");
  if (auto c = cancellation_member(p)) add(*c, "cancelling pair");
  if (auto c = unit_cancellation_member(p)) add(*c, "unit cancelling pair");

  const Semiring& R = p.R();
  auto S = p.semiring();
  if (R.elements()) {
    bool all = true;
    for (std::size_t k = 1; k <= opt.max_env; ++k) {
      FinSet E = range_set("e", k);
      KernelSystem sys{S, p.dom(), p.cod() * E, {}};
      for (std::size_t a = 0; a < p.dom().size(); ++a)
        for (std::size_t x = 0; x < p.cod().size(); ++x) {
          LinearEq eq{{}, p(x, a)};
          for (std::size_t e = 0; e < k; ++e) eq.terms.push_back({sys.var(x * k + e, a), R.one()});
          sys.eqs.push_back(std::move(eq));
        }
      auto sol = solve(sys, opt.enum_cap);
      if (!sol.exhaustive) {
        all = false;
        break;
      }
      for (auto& t : sol.solutions) add(Dilation(p, t), "enumerated |E|=" + std::to_string(k));
    }
    fam.exhaustive = all;
    if (all) return fam;
  }
  Rng rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    std::size_t k = 1 + draw(rng, opt.max_env);
    FinSet E = range_set("e", k);
    std::vector<std::vector<Value>> parts(p.cod().size() * p.dom().size());
    for (std::size_t x = 0; x < p.cod().size(); ++x)
      for (std::size_t a = 0; a < p.dom().size(); ++a) parts[x * p.dom().size() + a] = R.split(p(x, a), k, rng);
    Kernel t = Kernel::build(S, p.dom(), p.cod() * E, [&](std::size_t xe, std::size_t a) {
      return parts[(xe / k) * p.dom().size() + a][xe % k];
    });
    add(Dilation(p, t), "random split #" + std::to_string(s));
  }
  return fam;
}

Verdict dilation_separates(const Kernel& f, const Kernel& g, const Dilation& pi) {
  const Semiring& R = f.R();
  const Kernel& t = pi.total();
  std::size_t ne = pi.env().size();
  for (std::size_t a = 0; a < t.dom().size(); ++a)
    for (std::size_t x = 0; x < f.dom().size(); ++x)
      for (std::size_t y = 0; y < f.cod().size(); ++y)
        for (std::size_t e = 0; e < ne; ++e) {
          const Value& m = t(x * ne + e, a);
          Value lhs = R.mul(f(y, x), m), rhs = R.mul(g(y, x), m);
          if (lhs != rhs)
            return Verdict::fails(at_json({{"a", t.dom().label(a)},
                                           {"x", f.dom().label(x)},
                                           {"y", f.cod().label(y)},
                                           {"e", pi.env().label(e)},
                                           {"lhs", lhs.str()},
                                           {"rhs", rhs.str()}}));
        }
  return Verdict::holds();
}

Verdict dilational_equal(const Kernel& f, const Kernel& g, const Kernel& p, const SearchOptions& opt) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw UsageError("dilational_equal: f and g differ in type");
  if (p.cod() != f.dom()) throw UsageError("dilational_equal: p does not land in the domain of f");
  if (f.semiring() != p.semiring() || g.semiring() != p.semiring()) throw UsageError("mixed semirings");
  if (f == g) return Verdict::holds("theory:reflexivity");
  auto ase = as_equal(f, g, p);
  if (ase.failed()) {
    Dilation oc = make_output_copy(p);
    Verdict v = dilation_separates(f, g, oc);
    json w{{"dilation", kernel_json(oc.total())}, {"origin", "output copy"}, {"at", v.witness}};
    return Verdict::fails(w).note("not even almost surely equal");
  }
  if (causal_certified(p.R()))
    return Verdict::holds("theory:pes-from-causality").note("almost surely equal and the semiring is causal");
  auto fam = dilation_family(p, opt);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    Verdict v = dilation_separates(f, g, fam.members[i]);
    if (v.failed()) {
      json w{{"dilation", kernel_json(fam.members[i].total())}, {"origin", fam.origin[i]}, {"at", v.witness}};
      return Verdict::fails(w);
    }
  }
  std::string n = std::to_string(fam.members.size()) + " dilations checked";
  if (fam.exhaustive) return Verdict::holds("exhaustive").note(n + ", all with |E| <= " + std::to_string(opt.max_env));
  return Verdict::unknown(opt.max_env).note(n);
}

bool is_dilation_morphism(const Dilation& source, const Dilation& target, const Kernel& f) {
  auto R = source.base().semiring();
  if (f.dom() != source.env() || f.cod() != target.env()) return false;
  Kernel lhs = compose(tensor(identity(R, source.base().cod()), f), source.total());
  return lhs == target.total();
}

namespace {

KernelSystem morphism_system(const Dilation& src, const Dilation& tgt) {
  auto S = src.base().semiring();
  const Semiring& R = *S;
  const Kernel &pi = src.total(), &pj = tgt.total();
  std::size_t ne = src.env().size(), nf = tgt.env().size();
  KernelSystem sys{S, src.env(), tgt.env(), {}};
  for (std::size_t a = 0; a < pi.dom().size(); ++a)
    for (std::size_t x = 0; x < src.base().cod().size(); ++x)
      for (std::size_t f = 0; f < nf; ++f) {
        LinearEq eq{{}, pj(x * nf + f, a)};
        for (std::size_t e = 0; e < ne; ++e) {
          const Value& c = pi(x * ne + e, a);
          if (!R.is_zero(c)) eq.terms.push_back({sys.var(f, e), c});
        }
        sys.eqs.push_back(std::move(eq));
      }
  return sys;
}

}  // namespace

MorphismSearch find_dilation_morphism(const Dilation& source, const Dilation& target, const SearchOptions& opt) {
  if (source.base() != target.base()) throw UsageError("dilations of different morphisms");
  KernelSystem sys = morphism_system(source, target);
  auto sol = solve(sys, opt.enum_cap);
  MorphismSearch out{Verdict::unknown(opt.enum_cap), std::nullopt, {}};
  switch (sol.status) {
    case SystemSolution::Status::Found: {
      out.verdict = Verdict::holds(sol.exhaustive ? "exhaustive" : "bound:" + std::to_string(opt.enum_cap));
      out.morphism = DilationMorphism{source, target, sol.solutions.front()};
      for (std::size_t i = 1; i < sol.solutions.size(); ++i) out.alternatives.push_back(sol.solutions[i]);
      if (sol.affine && source.base().R().kind() == Kind::Rational)
        for (auto& d : sol.affine->directions) {
          RVec x = sol.affine->particular;
          for (std::size_t i = 0; i < x.size(); ++i) x[i] += d[i];
          out.alternatives.push_back(kernel_from_rationals(sys, x));
        }
      break;
    }
    case SystemSolution::Status::None:
      out.verdict = Verdict::fails(json{{"target", kernel_json(target.total())}, {"reason", "no mediator"}});
      break;
    case SystemSolution::Status::Unknown:
      break;
  }
  out.verdict.note(sol.method);
  return out;
}

namespace {

// mediators into target, up to candidate-dilational equality
Verdict mediator_unique(const Dilation& cand, const Dilation& target, const MorphismSearch& ms,
                        const SearchOptions& opt) {
  auto R = cand.base().semiring();
  const Kernel& f0 = ms.morphism->map;
  Kernel idx = identity(R, cand.base().cod());
  SearchOptions inner = opt;
  inner.samples = std::min<std::size_t>(opt.samples, 20);
  std::vector<Kernel> alts = ms.alternatives;
  if (R->kind() == Kind::NonnegRational) {
    // charged columns must be pinned; otherwise take the two extreme mediators
    KernelSystem sys = morphism_system(cand, target);
    std::size_t ne = cand.env().size();
    auto movable = affinely_free(sys);
    for (std::size_t e = 0; e < ne; ++e) {
      bool charged = false;
      for (std::size_t a = 0; a < cand.total().dom().size() && !charged; ++a)
        for (std::size_t x = 0; x < cand.base().cod().size() && !charged; ++x)
          charged = !R->is_zero(cand.total()(x * ne + e, a));
      if (!charged) continue;
      for (std::size_t f = 0; f < target.env().size(); ++f) {
        if (!movable[sys.var(f, e)]) continue;
        auto r = variable_range(sys, sys.var(f, e));
        if (r && r->lo != r->hi) {
          alts.push_back(kernel_from_rationals(sys, r->at_lo));
          alts.push_back(kernel_from_rationals(sys, r->at_hi));
        }
      }
    }
  }
  Verdict overall = Verdict::holds();
  for (auto& f1 : alts) {
    Verdict v = dilational_equal(tensor(idx, f0), tensor(idx, f1), cand.total(), inner);
    if (v.failed())
      return Verdict::fails(json{{"target", kernel_json(target.total())},
                                 {"reason", "mediators not dilationally equal"},
                                 {"mediator1", kernel_json(f0)},
                                 {"mediator2", kernel_json(f1)},
                                 {"at", v.witness}});
    if (v.status == Status::UnknownUpTo) overall = v;
  }
  return overall;
}

}  // namespace

Verdict verify_initial(const Dilation& candidate, const SearchOptions& opt) {
  const Kernel& p = candidate.base();
  auto fam = dilation_family(p, opt);
  bool unknown = false;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    auto ms = find_dilation_morphism(candidate, fam.members[i], opt);
    if (ms.verdict.failed()) {
      json w{{"dilation", ms.verdict.witness["target"]}, {"reason", ms.verdict.witness["reason"]}};
      w["origin"] = fam.origin[i];
      return Verdict::fails(w).note("dilation without a mediator");
    }
    if (!ms.morphism) {
      unknown = true;
      continue;
    }
    Verdict u = mediator_unique(candidate, fam.members[i], ms, opt);
    if (u.failed()) {
      u.witness["origin"] = fam.origin[i];
      return u;
    }
    if (u.status == Status::UnknownUpTo) unknown = true;
  }
  std::string n = std::to_string(fam.members.size()) + " dilations factor uniquely";
  if (unknown) return Verdict::unknown(opt.max_env).note(n + " where decidable");
  const Semiring& R = p.R();
  if (positive_certified(R) && is_deterministic(p).ok() && candidate.total() == make_bloom(p).total())
    return Verdict::holds("theory:positive-bloom-initial").note(n);
  if (R.kind() == Kind::NonnegRational && candidate.total() == make_ioc(p).total())
    return Verdict::holds("theory:conditionals-ioc-initial").note(n);
  if (fam.exhaustive) return Verdict::holds("exhaustive").note(n + ", all with |E| <= " + std::to_string(opt.max_env));
  return Verdict::unknown(opt.max_env).note(n);
}

Verdict is_noncreative(const Kernel& p, const SearchOptions& opt) {
  auto S = p.semiring();
  const Semiring& R = *S;
  const FinSet& A = p.dom();
  auto fam = dilation_family(p, opt);
  bool unknown = false;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const Dilation& d = fam.members[i];
    Kernel pe = d.env_marginal();
    Kernel iota = compose(tensor(identity(S, A), pe), copy(S, A));
    if (compose(tensor(p, identity(S, d.env())), iota) == d.total()) continue;
    // general iota : A -> A (x) E with A-marginal id and (p (x) id) iota = pi
    std::size_t ne = d.env().size(), na = A.size();
    KernelSystem sys{S, A, A * d.env(), {}};
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t a1 = 0; a1 < na; ++a1) {
        LinearEq eq{{}, a1 == a ? R.one() : R.zero()};
        for (std::size_t e = 0; e < ne; ++e) eq.terms.push_back({sys.var(a1 * ne + e, a), R.one()});
        sys.eqs.push_back(std::move(eq));
      }
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t x = 0; x < p.cod().size(); ++x)
        for (std::size_t e = 0; e < ne; ++e) {
          LinearEq eq{{}, d.total()(x * ne + e, a)};
          for (std::size_t a1 = 0; a1 < na; ++a1)
            if (!R.is_zero(p(x, a1))) eq.terms.push_back({sys.var(a1 * ne + e, a), p(x, a1)});
          sys.eqs.push_back(std::move(eq));
        }
    auto sol = solve(sys, opt.enum_cap);
    if (sol.status == SystemSolution::Status::None)
      return Verdict::fails(json{{"dilation", kernel_json(d.total())}, {"origin", fam.origin[i]},
                                 {"reason", "no dilation of the identity produces it"}});
    if (sol.status == SystemSolution::Status::Unknown) unknown = true;
  }
  std::string n = std::to_string(fam.members.size()) + " dilations factor";
  if (unknown) return Verdict::unknown(opt.max_env).note(n + " where decidable");
  if (p.cod().arity() == 0) return Verdict::holds("theory:discard-broadcasting").note(n);
  if (positive_certified(R) && is_deterministic(p).ok()) return Verdict::holds("theory:positive-deterministic").note(n);
  if (fam.exhaustive) return Verdict::holds("exhaustive").note(n + ", all with |E| <= " + std::to_string(opt.max_env));
  return Verdict::unknown(opt.max_env).note(n);
}

Verdict is_broadcasting(const Kernel& b) {
  std::size_t k = b.dom().arity();
  if (b.cod().arity() != 2 * k || b.cod().sub(iota_from(0, k)) != b.dom() ||
      b.cod().sub(iota_from(k, 2 * k)) != b.dom())
    throw UsageError("broadcasting candidate must have type X -> X (x) X");
  Kernel id = identity(b.semiring(), b.dom());
  if (marginalize(b, iota_from(0, k)) != id) return Verdict::fails(json{{"marginal", "first"}});
  if (marginalize(b, iota_from(k, 2 * k)) != id) return Verdict::fails(json{{"marginal", "second"}});
  return Verdict::holds();
}

BroadcastReport find_broadcasting(SemiringPtr S, const FinSet& X, const SearchOptions& opt) {
  const Semiring& R = *S;
  std::size_t n = X.size();
  KernelSystem sys{S, X, X * X, {}};
  for (std::size_t x0 = 0; x0 < n; ++x0)
    for (std::size_t u = 0; u < n; ++u) {
      LinearEq first{{}, u == x0 ? R.one() : R.zero()}, second{{}, u == x0 ? R.one() : R.zero()};
      for (std::size_t v = 0; v < n; ++v) {
        first.terms.push_back({sys.var(u * n + v, x0), R.one()});
        second.terms.push_back({sys.var(v * n + u, x0), R.one()});
      }
      sys.eqs.push_back(std::move(first));
      sys.eqs.push_back(std::move(second));
    }
  Kernel cp = copy(S, X);
  BroadcastReport rep{{cp}, 0, Verdict::unknown(opt.enum_cap)};
  auto sol = solve(sys, opt.enum_cap);
  if (sol.affine) rep.dimension = sol.affine->directions.size();
  auto non_unique = [&](const Kernel& other) {
    return Verdict::fails(json{{"broadcasting", kernel_json(other)}, {"reason", "differs from copy"}});
  };
  if (R.elements()) {
    if (!sol.exhaustive) return rep;
    for (auto& k : sol.solutions)
      if (k != cp) rep.solutions.push_back(k);
    rep.unique = rep.solutions.size() == 1 ? Verdict::holds("exhaustive") : non_unique(rep.solutions[1]);
    return rep;
  }
  if (!R.rational_kind()) return rep;
  if (R.kind() == Kind::Rational) {
    for (auto& d : sol.affine->directions) {
      RVec x(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) x[i] = R.as_rational(cp.entries()[i]) + d[i];
      rep.solutions.push_back(kernel_from_rationals(sys, x));
    }
    rep.unique = rep.dimension == 0 ? Verdict::holds("exhaustive") : non_unique(rep.solutions[1]);
    return rep;
  }
  auto movable = affinely_free(sys);
  for (std::size_t v = 0; v < n * n * n; ++v) {
    if (!movable[v]) continue;
    auto r = variable_range(sys, v);
    if (r && r->lo != r->hi) {
      Kernel other = kernel_from_rationals(sys, r->at_lo);
      if (other == cp) other = kernel_from_rationals(sys, r->at_hi);
      rep.solutions.push_back(other);
      rep.unique = non_unique(other);
      return rep;
    }
  }
  rep.unique = Verdict::holds("exhaustive").note("every entry is pinned by the marginal constraints and nonnegativity");
  return rep;
}

}  // namespace markov
