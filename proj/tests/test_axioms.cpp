#include "doctest.h"
#include "markov/axioms.hpp"
#include "markov/dilation.hpp"
#include "markov/errors.hpp"

using namespace markov;

namespace {

SemiringPtr Q() { return builtin("rational"); }
SemiringPtr N() { return builtin("nonneg-rational"); }

Kernel rank1_f() { return Kernel::from_columns(Q(), FinSet::unit(), range_set("x", 3), {{"1", "1", "-1"}}); }
Kernel rank1_g() {
  return Kernel::from_columns(Q(), range_set("x", 3), range_set("z", 2), {{"1", "0"}, {"0", "1"}, {"0", "1"}});
}

}  // namespace

TEST_CASE("positivity fails for the rank-one pair") {
  Kernel f = rank1_f(), g = rank1_g();
  CHECK(rational_rank(f) == 1);
  CHECK(is_stochastic(g));
  CHECK_FALSE(is_stochastic(f));
  CHECK(compose(g, f) == Kernel::from_columns(Q(), FinSet::unit(), range_set("z", 2), {{"1", "0"}}));
  AxiomReport r = check_positivity_instance(f, g);
  REQUIRE(r.verdict.failed());
  CHECK_FALSE(r.verdict.vacuous);
  // direct evaluation at (x3, z2): g(z2|x3) f(x3) = -1 against f(x3) (g f)(z2) = 0
  bool found = false;
  for (auto& v : r.verdict.witness["violations"])
    if (v["x"] == "x3" && v["y"] == "z2") {
      found = true;
      CHECK(v["lhs"] == "-1");
      CHECK(v["rhs"] == "0");
    }
  CHECK(found);
  CHECK(r.consistent);
}

TEST_CASE("positivity holds for nonnegative pairs and is vacuous off deterministic composites") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    FinSet A = range_set("a", 1 + draw(rng, 2)), X = range_set("x", 1 + draw(rng, 3)), Y = range_set("y", 1 + draw(rng, 2));
    Kernel f = random_kernel(N(), A, X, rng);
    // g collapses everything onto y1, so g f is deterministic
    Kernel g = delta(N(), DetFunction{X, Y, std::vector<std::size_t>(X.size(), 0)});
    AxiomReport r = check_positivity_instance(f, g);
    CHECK(r.verdict.ok());
    CHECK(r.consistent);
  }
  Kernel f = Kernel::from_columns(N(), FinSet::unit(), range_set("x", 2), {{"1/2", "1/2"}});
  AxiomReport r = check_positivity_instance(f, identity(N(), range_set("x", 2)));
  CHECK(r.verdict.ok());
  CHECK(r.verdict.vacuous);
}

TEST_CASE("pes over signed rationals") {
  FinSet X = range_set("x", 2), Y = range_set("y", 2);
  Kernel p = Kernel::from_columns(Q(), FinSet::unit(), X, {{"0", "1"}});
  Kernel h1 = Kernel::from_columns(Q(), X, Y, {{"1", "0"}, {"1", "0"}});
  Kernel h2 = Kernel::from_columns(Q(), X, Y, {{"0", "1"}, {"1", "0"}});
  AxiomReport r = check_pes_instance(h1, h2, p);
  CHECK(r.verdict.failed());
  CHECK_FALSE(r.verdict.vacuous);
  CHECK(r.consistent);

  Kernel pi = Kernel::from_columns(Q(), FinSet::unit(), X * range_set("e", 2), {{"1", "-1", "1", "0"}});
  Dilation d(p, pi);
  Verdict sep = dilation_separates(h1, h2, d);
  REQUIRE(sep.failed());
  CHECK(sep.witness["y"] == "y1");
  CHECK(sep.witness["e"] == "e1");
}

TEST_CASE("pes is vacuous when the antecedent fails and never fails then") {
  FinSet X = range_set("x", 2);
  Kernel p = Kernel::from_columns(N(), FinSet::unit(), X, {{"1/2", "1/2"}});
  Kernel h1 = identity(N(), X);
  AxiomReport r = check_pes_instance(h1, Kernel::from_columns(N(), X, X, {{"1", "0"}, {"1", "0"}}), p);
  CHECK(r.verdict.ok());
  CHECK(r.verdict.vacuous);
  AxiomReport same = check_pes_instance(h1, h1, p);
  CHECK(same.verdict.ok());
}

TEST_CASE("relative positivity along the identity agrees with positivity") {
  Kernel f = rank1_f(), g = rank1_g();
  Kernel p = identity(Q(), FinSet::unit());
  AxiomReport r = check_relative_positivity_instance(f, g, p);
  CHECK(r.verdict.failed());
  CHECK(r.consistent);
}

TEST_CASE("relative positivity over nonneg rationals") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    FinSet T = range_set("t", 2), A = range_set("a", 2), X = range_set("x", 2);
    Kernel p = random_kernel(N(), T, A, rng);
    Kernel f = random_kernel(N(), A, X, rng);
    Kernel g = delta(N(), DetFunction{X, range_set("y", 1), {0, 0}});
    AxiomReport r = check_relative_positivity_instance(f, g, p);
    CHECK_FALSE(r.verdict.failed());
    CHECK(r.consistent);
  }
}

TEST_CASE("equivalence audit over nonneg rationals") {
  AxiomReport r = audit_equivalences(N(), AuditOptions{3, 42, 500});
  CHECK(r.verdict.ok());
  CHECK(r.consistent);
  CHECK(r.stats["disagreements"] == 0);
  CHECK(r.stats["failed"] == 0);
  CHECK(r.stats["samples"] == 500);
}

TEST_CASE("equivalence audit over signed rationals finds failures but no disagreements") {
  AxiomReport r = audit_equivalences(Q(), AuditOptions{3, 42, 500});
  CHECK(r.consistent);
  CHECK(r.stats["disagreements"] == 0);
  CHECK(r.stats["failed"].get<int>() > 0);
  CHECK(r.stats.contains("first_failure"));
}

TEST_CASE("audit is reproducible") {
  json a = to_json(audit_equivalences(Q(), AuditOptions{2, 9, 100}));
  json b = to_json(audit_equivalences(Q(), AuditOptions{2, 9, 100}));
  CHECK(a == b);
}

TEST_CASE("meta implication across the builtins") {
  AxiomReport r = audit_meta_implication(builtin_names());
  CHECK(r.verdict.ok());
  REQUIRE(r.stats["converse_refuted_by"].size() == 1);
  CHECK(r.stats["converse_refuted_by"][0] == "ideal-z2i");
}

TEST_CASE("axiom report json carries cross checks") {
  json j = to_json(check_positivity_instance(rank1_f(), rank1_g()));
  CHECK(j["axiom"] == "positivity");
  CHECK(j["status"] == "Fails");
  CHECK(j["cross_checks"].is_array());
  CHECK(j["consistent"] == true);
}
