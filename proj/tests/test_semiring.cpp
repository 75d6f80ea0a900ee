#include <set>

#include "doctest.h"
#include "markov/errors.hpp"
#include "markov/properties.hpp"

using namespace markov;

namespace {

using V = Ideal::Vec;

// all lattice points in [-box, box]^2 reachable from 0 by adding +-g and +-2i*g,
// never leaving [-outer, outer]^2
std::set<V> closure(const std::vector<V>& gens, std::int64_t box, std::int64_t outer) {
  std::vector<V> steps;
  for (auto g : gens)
    for (auto h : {g, times_2i(g)}) {
      steps.push_back(h);
      steps.push_back(V{-h[0], -h[1]});
    }
  std::set<V> seen{V{0, 0}};
  std::vector<V> todo{V{0, 0}};
  while (!todo.empty()) {
    V v = todo.back();
    todo.pop_back();
    for (auto s : steps) {
      V w{v[0] + s[0], v[1] + s[1]};
      if (std::abs(w[0]) > outer || std::abs(w[1]) > outer || seen.count(w)) continue;
      seen.insert(w);
      todo.push_back(w);
    }
  }
  std::set<V> in;
  for (auto v : seen)
    if (std::abs(v[0]) <= box && std::abs(v[1]) <= box) in.insert(v);
  return in;
}

bool lattice_law_oracle(const FiniteLattice& l) {
  int n = l.elements.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]]) return false;
  return true;
}

bool axioms_oracle(const Semiring& R) {
  auto els = *R.elements();
  for (auto& a : els) {
    if (R.add(a, R.zero()) != a || R.mul(a, R.one()) != a || R.mul(a, R.zero()) != R.zero()) return false;
    for (auto& b : els) {
      if (R.add(a, b) != R.add(b, a) || R.mul(a, b) != R.mul(b, a)) return false;
      for (auto& c : els) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) return false;
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) return false;
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) return false;
      }
    }
  }
  return R.zero() != R.one();
}

}  // namespace

TEST_CASE("ideal membership agrees with brute-force subgroup closure") {
  std::vector<std::vector<V>> presentations = {
      {{2, 0}}, {{1, 1}}, {{2, 2}, {4, 0}}, {{3, 1}}, {{0, 1}}, {{2, 0}, {0, 2}}, {{6, 3}, {4, 2}}};
  for (auto& gens : presentations) {
    Ideal I = Ideal::generated(gens);
    auto in = closure(gens, 10, 40);
    for (std::int64_t a = -10; a <= 10; ++a)
      for (std::int64_t b = -10; b <= 10; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(I.contains(V{a, b}) == (in.count(V{a, b}) > 0));
      }
  }
}

TEST_CASE("hnf shape") {
  auto rows = hnf({{4, 2}, {6, 8}, {2, 0}});
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == 0);
  CHECK(rows[0][0] > 0);
  CHECK(rows[1][1] > 0);
  CHECK(rows[0][1] >= 0);
  CHECK(rows[0][1] < rows[1][1]);
  CHECK(hnf({}).empty());
  CHECK(Ideal().is_zero());
}

TEST_CASE("ideal values from the quantale example") {
  Ideal s = Ideal::generated({{2, 0}, {0, 2}});  // (2, 4i): 2 and 2*(2i)
  CHECK(s.str() == "(2,4i)");
  Ideal t = Ideal::parse("(4,2i)");
  CHECK((s * s).str() == "(4,8i)");
  CHECK((t * t).str() == "(4,8i)");
  CHECK((s * t).str() == "(8,4i)");
  CHECK((s + t).str() == "(2,2i)");
  CHECK(Ideal::parse(s.str()) == s);
  CHECK_THROWS_AS(Ideal::parse("(2)"), UsageError);
}

TEST_CASE("ideal sums and products contain their generators") {
  Ideal I = Ideal::principal({1, 1}), J = Ideal::principal({3, 0});
  CHECK((I + J).contains({1, 1}));
  CHECK((I + J).contains({3, 0}));
  CHECK((I * J).contains(mul_elements({1, 1}, {3, 0})));
  CHECK((I * Ideal::unit()) == I);
  CHECK((I * Ideal()).is_zero());
}

TEST_CASE("finite semiring axioms against an exhaustive oracle") {
  for (auto name : {"boolean", "z2", "chain-2", "chain-3", "chain-5", "bool-4", "bool-8", "div-12"}) {
    CAPTURE(name);
    SemiringPtr R = builtin(name);
    REQUIRE(R->elements());
    CHECK(axioms_oracle(*R));
    Verdict v = check_semiring_axioms(*R, Strategy::exhaustive());
    CHECK(v.ok());
    CHECK(v.certificate == "exhaustive");
  }
}

TEST_CASE("a table breaking distributivity fails the axiom check") {
  FiniteTable t;
  t.elements = {"0", "1", "a"};
  // max on the chain 0 < a < 1 for addition, but a*a = 1
  t.add = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
  t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  SemiringPtr R = table_semiring("broken", t);
  CHECK_FALSE(axioms_oracle(*R));
  Verdict v = check_semiring_axioms(*R, Strategy::exhaustive());
  CHECK(v.failed());
  CHECK(!v.witness.is_null());
}

TEST_CASE("lattice validation against an exhaustive triple oracle") {
  std::vector<FiniteLattice> ls = {chain_lattice(2), chain_lattice(4), boolean_lattice(2), boolean_lattice(3),
                                   divisor_lattice(12), divisor_lattice(30), m3_lattice()};
  for (auto& l : ls) {
    CAPTURE(l.elements.size());
    CHECK(validate_lattice(l).ok() == lattice_law_oracle(l));
  }
  Verdict m3 = validate_lattice(m3_lattice());
  REQUIRE(m3.failed());
  CHECK(m3.witness["law"] == "distributivity");
  CHECK(validate_lattice(divisor_lattice(12)).ok());
}

TEST_CASE("causality criterion on lattices by exhaustive quadruples") {
  for (auto name : {"chain-2", "chain-3", "chain-4", "chain-5", "bool-4", "bool-8", "div-12"}) {
    CAPTURE(name);
    Verdict v = check_causality_criterion(*builtin(name), Strategy::exhaustive());
    CHECK(v.ok());
    CHECK(v.certificate == "exhaustive");
  }
}

TEST_CASE("zero-sum-freeness and entireness by kind") {
  CHECK(check_zerosumfree(*builtin("rational")).failed());
  CHECK(check_zerosumfree(*builtin("nonneg-rational")).ok());
  CHECK(check_zerosumfree(*builtin("boolean")).ok());
  CHECK(check_zerosumfree(*builtin("tropical")).ok());
  CHECK(check_zerosumfree(*builtin("z2")).failed());
  CHECK(check_zerosumfree(*builtin("ideal-z2i")).ok());
  CHECK(check_entire(*builtin("rational")).ok());
  CHECK(check_entire(*builtin("chain-3")).ok());
  CHECK(check_entire(*builtin("bool-4")).failed());
  CHECK(check_entire(*builtin("div-12")).failed());
  CHECK(check_entire(*builtin("ideal-z2i")).ok());
}

TEST_CASE("zero-sum failure witness over the rationals") {
  Verdict v = check_zerosumfree(*builtin("rational"));
  REQUIRE(v.failed());
  const Semiring& R = *builtin("rational");
  Value r = R.parse(v.witness["r"]), s = R.parse(v.witness["s"]);
  CHECK(R.is_zero(R.add(r, s)));
  CHECK_FALSE(R.is_zero(r));
}

TEST_CASE("complements where they exist") {
  const Semiring& Q = *builtin("rational");
  CHECK(Q.complement(Q.parse("1/3"))->str() == "2/3");
  const Semiring& N = *builtin("nonneg-rational");
  CHECK(N.complement(N.parse("1/3"))->str() == "2/3");
  CHECK_FALSE(N.complement(N.parse("3/2")));
  const Semiring& B = *builtin("boolean");
  CHECK(B.complement(B.one()));
}

TEST_CASE("sampled strategies are reproducible") {
  const Semiring& R = *builtin("tropical");
  Verdict a = check_causality_criterion(R, Strategy::sampled(7, 300));
  Verdict b = check_causality_criterion(R, Strategy::sampled(7, 300));
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("rational parsing") {
  const Semiring& Q = *builtin("rational");
  CHECK(Q.parse("2/4").str() == "1/2");
  CHECK(Q.parse("-3").str() == "-3");
  CHECK_THROWS_AS(Q.parse("1/0"), UsageError);
  CHECK_THROWS_AS(builtin("no-such"), UsageError);
  CHECK_THROWS_AS(builtin("nonneg-rational")->parse("-1"), UsageError);
}
