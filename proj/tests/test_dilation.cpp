#include "doctest.h"
#include "markov/dilation.hpp"
#include "markov/errors.hpp"

using namespace markov;

namespace {

SemiringPtr Q() { return builtin("rational"); }
SemiringPtr N() { return builtin("nonneg-rational"); }

Kernel signed_q() {
  return Kernel::from_columns(Q(), FinSet::unit(), FinSet::atom({"x", "y"}) * FinSet::atom({"a", "b"}),
                              {{"1/2", "1/2", "1/2", "-1/2"}});
}

Kernel delta_x(SemiringPtr R) { return Kernel::from_columns(R, FinSet::unit(), FinSet::atom({"x", "y"}), {{"1", "0"}}); }

Kernel uniform2() { return Kernel::from_columns(N(), FinSet::unit(), FinSet::atom({"0", "1"}), {{"1/2", "1/2"}}); }

}  // namespace

TEST_CASE("constructed dilations verify") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    SemiringPtr R = trial % 2 ? Q() : N();
    Kernel p = random_kernel(R, range_set("a", 1 + draw(rng, 2)), range_set("x", 1 + draw(rng, 3)), rng);
    for (auto k : {DilationKind::Bloom, DilationKind::Ioc, DilationKind::OutputCopy}) {
      Dilation d = make_dilation(k, p);
      CHECK(verify_dilation(d.total(), p).ok());
      CHECK(marginalize(d.total(), {0}) == p);
    }
  }
  Kernel delta_y = Kernel::from_columns(Q(), FinSet::unit(), FinSet::atom({"x", "y"}), {{"0", "1"}});
  CHECK_THROWS_AS(Dilation(delta_y, signed_q()), UsageError);
}

TEST_CASE("verify_dilation reports the wrong marginal") {
  Kernel p = Kernel::from_columns(Q(), FinSet::unit(), FinSet::atom({"x", "y"}), {{"0", "1"}});
  Verdict v = verify_dilation(signed_q(), p);
  REQUIRE(v.failed());
  CHECK(v.witness.contains("x"));
  CHECK(v.witness.contains("marginal"));
}

TEST_CASE("bloom, output copy and ioc environments") {
  Kernel p = Kernel::from_columns(N(), range_set("a", 2), range_set("x", 2), {{"1/3", "2/3"}, {"1", "0"}});
  CHECK(make_output_copy(p).env() == p.cod());
  Dilation ioc = make_ioc(p);
  CHECK(ioc.env() == p.cod() * p.dom());
  Dilation bloom = make_bloom(p);
  CHECK(bloom.env_marginal() == marginalize(bloom.total(), {1}));
}

TEST_CASE("signed point-mass dilation fails both deterministic formulations") {
  Kernel q = signed_q(), p = delta_x(Q());
  Dilation d(p, q);
  Verdict det = is_deterministic_in(q, 1);
  REQUIRE(det.failed());
  CHECK(det.witness["x1"] == "y");
  CHECK(det.witness["x2"] == "y");
  CHECK(det.witness["e"] == "a");
  CHECK(det.witness["lhs"] == "1·1/2");
  CHECK(det.witness["rhs"] == "0·1/2");
  // direct evaluation: q(y,a) = 1/2 against p(y) * qE(a) = 0 * 1 = 0
  Verdict dmi = check_dmi_instance(d);
  REQUIRE(dmi.failed());
  CHECK(dmi.witness["x"] == "y");
  CHECK(dmi.witness["e"] == "a");
  CHECK(dmi.witness["lhs"] == "1/2");
  CHECK(dmi.witness["rhs"] == "0");
}

TEST_CASE("dmi needs a deterministic base") {
  Kernel p = Kernel::from_columns(Q(), FinSet::unit(), FinSet::atom({"x", "y"}), {{"1/2", "1/2"}});
  CHECK_THROWS_AS(check_dmi_instance(make_output_copy(p)), UsageError);
}

TEST_CASE("nonnegative dilations of deterministic bases satisfy dmi") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    FinSet A = range_set("a", 1 + draw(rng, 2)), X = range_set("x", 1 + draw(rng, 3));
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < A.size(); ++i) map.push_back(draw(rng, X.size()));
    Kernel p = delta(N(), DetFunction{A, X, map});
    auto fam = dilation_family(p, SearchOptions{2, static_cast<std::uint64_t>(trial), 10, 1u << 16});
    for (auto& d : fam.members) {
      CHECK(check_dmi_instance(d).ok());
      CHECK(is_deterministic_in(d.total(), 1).ok());
    }
  }
}

TEST_CASE("identity and flip under the uniform state") {
  Kernel p = uniform2();
  FinSet X = p.cod();
  Kernel id = identity(N(), X);
  Kernel flip = Kernel::from_columns(N(), X, X, {{"0", "1"}, {"1", "0"}});
  CHECK(compose(id, p) == compose(flip, p));
  CHECK(as_equal(id, flip, p).failed());
  Verdict v = dilational_equal(id, flip, p);
  REQUIRE(v.failed());
  CHECK(v.witness["dilation"] == kernel_json(compose(copy(N(), X), p)));
  CHECK(dilation_separates(id, flip, make_output_copy(p)).failed());
}

TEST_CASE("dilational equality of a kernel with itself") {
  Kernel p = uniform2();
  Kernel f = Kernel::from_columns(N(), p.cod(), p.cod(), {{"1/2", "1/2"}, {"1/3", "2/3"}});
  CHECK(dilational_equal(f, f, p).ok());
}

TEST_CASE("dilational equality over nonneg rationals follows from a.s. equality") {
  Kernel p = Kernel::from_columns(N(), FinSet::unit(), range_set("x", 3), {{"1/2", "1/2", "0"}});
  Kernel f = Kernel::from_columns(N(), p.cod(), range_set("y", 2), {{"1", "0"}, {"0", "1"}, {"1", "0"}});
  Kernel g = Kernel::from_columns(N(), p.cod(), range_set("y", 2), {{"1", "0"}, {"0", "1"}, {"0", "1"}});
  Verdict v = dilational_equal(f, g, p);
  CHECK(v.ok());
  CHECK(v.certificate.rfind("theory:", 0) == 0);
}

TEST_CASE("signed rationals separate a.s.-equal kernels with a cancelling dilation") {
  Kernel p = Kernel::from_columns(Q(), FinSet::unit(), range_set("x", 2), {{"0", "1"}});
  Kernel h1 = Kernel::from_columns(Q(), p.cod(), range_set("y", 2), {{"1", "0"}, {"1", "0"}});
  Kernel h2 = Kernel::from_columns(Q(), p.cod(), range_set("y", 2), {{"0", "1"}, {"1", "0"}});
  CHECK(as_equal(h1, h2, p).ok());
  Verdict v = dilational_equal(h1, h2, p);
  CHECK(v.failed());
}

TEST_CASE("mediators between constructed dilations") {
  Kernel p = Kernel::from_columns(N(), range_set("a", 2), range_set("x", 2), {{"1/3", "2/3"}, {"1/2", "1/2"}});
  Dilation ioc = make_ioc(p), oc = make_output_copy(p);
  auto m = find_dilation_morphism(ioc, oc);
  REQUIRE(m.verdict.ok());
  REQUIRE(m.morphism);
  CHECK(is_dilation_morphism(ioc, oc, m.morphism->map));
  // the conditional of the target is a mediator
  CHECK(is_dilation_morphism(ioc, oc, conditional(oc.total(), 1)));
  // output copy has no map back onto ioc: the input is lost
  CHECK(find_dilation_morphism(oc, ioc).verdict.failed());
}

TEST_CASE("initiality") {
  SearchOptions opt{2, 1, 20, 1u << 16};
  Kernel det = delta(N(), DetFunction{range_set("a", 2), range_set("x", 2), {0, 0}});
  CHECK(verify_initial(make_bloom(det), opt).ok());
  Kernel full = Kernel::from_columns(N(), range_set("a", 2), range_set("x", 2), {{"1/3", "2/3"}, {"1/4", "3/4"}});
  CHECK(verify_initial(make_ioc(full), opt).ok());
  Verdict signed_copy = verify_initial(make_output_copy(identity(Q(), range_set("x", 2))), opt);
  REQUIRE(signed_copy.failed());
  CHECK(signed_copy.witness.contains("dilation"));
  CHECK(signed_copy.witness["reason"] == "no mediator");
}

TEST_CASE("non-creativity") {
  SearchOptions opt{2, 0, 0, 1u << 16};
  CHECK(is_noncreative(delta_x(N()), opt).ok());
  Verdict v = is_noncreative(delta_x(Q()), opt);
  REQUIRE(v.failed());
  CHECK(v.witness["origin"] == "cancelling pair");
}

TEST_CASE("boolean broadcasting matches an enumeration of all tables") {
  SemiringPtr B = builtin("boolean");
  FinSet X = FinSet::atom({"0", "1"});
  std::size_t oracle = 0;
  for (unsigned bits = 0; bits < 256; ++bits) {
    // b(x1,x2|a) = bit (a*4 + x1*2 + x2)
    bool ok = true;
    for (int a = 0; a < 2 && ok; ++a)
      for (int x = 0; x < 2 && ok; ++x) {
        bool first = false, second = false;
        for (int y = 0; y < 2; ++y) {
          first |= (bits >> (a * 4 + x * 2 + y)) & 1;
          second |= (bits >> (a * 4 + y * 2 + x)) & 1;
        }
        ok = first == (x == a) && second == (x == a);
      }
    oracle += ok;
  }
  BroadcastReport r = find_broadcasting(B, X);
  CHECK(r.solutions.size() == oracle);
  REQUIRE_FALSE(r.solutions.empty());
  CHECK(r.solutions.front() == copy(B, X));
  for (auto& s : r.solutions) CHECK(is_broadcasting(s).ok());
}

TEST_CASE("broadcasting over rationals") {
  for (std::size_t n : {2, 3}) {
    BroadcastReport r = find_broadcasting(N(), range_set("x", n));
    CHECK(r.unique.ok());
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions.front() == copy(N(), range_set("x", n)));
  }
  FinSet X = FinSet::atom({"0", "1"});
  // copy plus (-1)^(x1+x2) in every column
  Kernel b = Kernel::from_columns(Q(), X, X * X, {{"2", "-1", "-1", "1"}, {"1", "-1", "-1", "2"}});
  CHECK(is_broadcasting(b).ok());
  CHECK(b != copy(Q(), X));
  BroadcastReport s = find_broadcasting(Q(), X);
  CHECK(s.unique.failed());
  CHECK(s.dimension > 0);
}

TEST_CASE("decomposition dilation") {
  Kernel m = Kernel::from_columns(N(), FinSet::unit(), range_set("e", 2), {{"1/2", "1/2"}});
  Kernel k = Kernel::from_columns(N(), range_set("e", 2), range_set("x", 2), {{"1", "0"}, {"1/3", "2/3"}});
  Kernel p = compose(k, m);
  Dilation d = make_from_decomposition(p, m, k);
  CHECK(d.env_marginal() == m);
  CHECK(d.total().at("(x2,e2)", "•") == N()->parse("1/3"));
  CHECK(N()->is_zero(d.total().at("(x2,e1)", "•")));
  Kernel wrong = Kernel::from_columns(N(), FinSet::unit(), range_set("x", 2), {{"1", "0"}});
  CHECK_THROWS_AS(make_from_decomposition(wrong, m, k), UsageError);
}
