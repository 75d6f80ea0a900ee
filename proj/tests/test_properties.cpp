#include "doctest.h"
#include "markov/axioms.hpp"
#include "markov/dilation.hpp"
#include "markov/properties.hpp"

using namespace markov;

namespace {

using V = Ideal::Vec;

SemiringPtr Q() { return builtin("rational"); }
SemiringPtr N() { return builtin("nonneg-rational"); }

std::int64_t small(Rng& rng, std::int64_t r) { return static_cast<std::int64_t>(draw(rng, 2 * r + 1)) - r; }

V random_vec(Rng& rng) { return V{small(rng, 6), small(rng, 6)}; }

// same ideal, different generators: unimodular row moves plus redundant members
std::vector<V> represent(const std::vector<V>& gens, Rng& rng) {
  std::vector<V> out = gens;
  for (int step = 0; step < 4 && out.size() > 1; ++step) {
    std::size_t i = draw(rng, out.size()), j = draw(rng, out.size());
    if (i == j) continue;
    std::int64_t k = small(rng, 3);
    out[i] = V{out[i][0] + k * out[j][0], out[i][1] + k * out[j][1]};
  }
  V extra{0, 0};
  for (auto& g : gens) {
    std::int64_t a = small(rng, 2), b = small(rng, 2);
    V t = times_2i(g);
    extra = V{extra[0] + a * g[0] + b * t[0], extra[1] + a * g[1] + b * t[1]};
  }
  out.push_back(extra);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::vector<V> random_gens(Rng& rng) {
  std::vector<V> g;
  std::size_t n = 1 + draw(rng, 2);
  for (std::size_t i = 0; i < n; ++i) g.push_back(random_vec(rng));
  return g;
}

Kernel random_det(SemiringPtr R, const FinSet& A, const FinSet& X, Rng& rng) {
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < A.size(); ++i) map.push_back(draw(rng, X.size()));
  return delta(R, DetFunction{A, X, map});
}

FinSet rand_set(const std::string& prefix, Rng& rng, std::size_t max = 3) { return range_set(prefix, 1 + draw(rng, max)); }

// a state with some zero-mass points, and a kernel changed only there
struct SupportPair {
  Kernel p, f, g;
};

SupportPair support_pair(SemiringPtr R, Rng& rng) {
  FinSet A = rand_set("a", rng, 2), X = range_set("x", 2 + draw(rng, 2)), Y = rand_set("y", rng, 2);
  std::size_t hole = draw(rng, X.size());
  Kernel p0 = random_kernel(R, A, X, rng);
  // move the mass of the hole onto another point
  std::size_t other = (hole + 1) % X.size();
  Kernel p = Kernel::build(R, A, X, [&](std::size_t x, std::size_t a) {
    if (x == hole) return R->zero();
    if (x == other) return R->add(p0(x, a), p0(hole, a));
    return p0(x, a);
  });
  Kernel f = random_kernel(R, X, Y, rng), h = random_kernel(R, X, Y, rng);
  Kernel g = Kernel::build(R, X, Y, [&](std::size_t y, std::size_t x) { return x == hole ? h(y, x) : f(y, x); });
  return {p, f, g};
}

}  // namespace

TEST_CASE("ideal sums and products do not depend on the presentation") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto gi = random_gens(rng), gj = random_gens(rng);
    Ideal I = Ideal::generated(gi), J = Ideal::generated(gj);
    Ideal I2 = Ideal::generated(represent(gi, rng)), J2 = Ideal::generated(represent(gj, rng));
    CHECK(I == I2);
    CHECK(J == J2);
    CHECK((I + J) == (I2 + J2));
    CHECK((I * J) == (I2 * J2));
    CHECK((I * J) == (J * I));
  }
}

TEST_CASE("principal ideals multiply like their generators") {
  Rng rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    V a = random_vec(rng), b = random_vec(rng);
    CHECK((Ideal::principal(a) * Ideal::principal(b)) == Ideal::principal(mul_elements(a, b)));
  }
}

TEST_CASE("causality implies zero-sum-freeness on every builtin") {
  for (auto& n : builtin_names()) {
    CAPTURE(n);
    const Semiring& R = *builtin(n);
    Verdict c = check_causality_criterion(R, Strategy::sampled(3, 2000));
    Verdict z = check_zerosumfree(R, Strategy::sampled(3, 2000));
    if (c.ok()) CHECK_FALSE(z.failed());
  }
}

TEST_CASE("complement law") {
  Rng rng(103);
  for (auto& n : builtin_names()) {
    CAPTURE(n);
    const Semiring& R = *builtin(n);
    std::vector<Value> vs = R.pool();
    for (int i = 0; i < 50; ++i) vs.push_back(R.sample(rng));
    for (auto& r : vs)
      if (auto c = find_complement(r)) CHECK(R.add(r, *c) == R.one());
  }
}

TEST_CASE("finite semirings satisfy the axioms exhaustively") {
  for (auto& n : builtin_names()) {
    const Semiring& R = *builtin(n);
    if (!R.elements()) continue;
    CAPTURE(n);
    CHECK(check_semiring_axioms(R, Strategy::exhaustive()).ok());
  }
}

TEST_CASE("constructions keep columns normalized") {
  Rng rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    SemiringPtr R = builtin(trial % 3 == 0 ? "rational" : trial % 3 == 1 ? "boolean" : "chain-3");
    FinSet A = rand_set("a", rng), X = rand_set("x", rng), Y = rand_set("y", rng);
    Kernel f = random_kernel(R, A, X * Y, rng), g = random_kernel(R, X * Y, A, rng);
    for (const Kernel& k : {compose(g, f), tensor(f, g), marginalize(f, {1}), marginalize(f, {1, 0})}) {
      for (std::size_t a = 0; a < k.dom().size(); ++a) {
        Value s = R->zero();
        for (std::size_t x = 0; x < k.cod().size(); ++x) s = R->add(s, k(x, a));
        CHECK(s == R->one());
      }
    }
  }
}

TEST_CASE("copy is a commutative comonoid and multiplicative") {
  for (auto name : {"rational", "boolean", "tropical", "div-12"}) {
    SemiringPtr R = builtin(name);
    FinSet X = range_set("x", 3), Y = range_set("y", 2);
    Kernel c = copy(R, X), id = identity(R, X), d = discard(R, X);
    CHECK(compose(tensor(c, id), c) == compose(tensor(id, c), c));
    CHECK(compose(tensor(d, id), c) == id);
    CHECK(compose(tensor(id, d), c) == id);
    CHECK(compose(swap(R, X, X), c) == c);
    // copy on X (x) Y is (x, x, y, y) reordered to (x, y, x, y)
    Kernel both = tensor(c, copy(R, Y));
    CHECK(copy(R, X * Y) == compose(permutation(R, both.cod(), {0, 2, 1, 3}), both));
  }
}

TEST_CASE("interchange law") {
  Rng rng(105);
  for (int trial = 0; trial < 50; ++trial) {
    SemiringPtr R = trial % 2 ? Q() : builtin("tropical");
    FinSet A = rand_set("a", rng, 2), B = rand_set("b", rng, 2), X = rand_set("x", rng, 2), Y = rand_set("y", rng, 2);
    FinSet U = rand_set("u", rng, 2), W = rand_set("w", rng, 2);
    Kernel f1 = random_kernel(R, A, X, rng), f2 = random_kernel(R, B, Y, rng);
    Kernel g1 = random_kernel(R, X, U, rng), g2 = random_kernel(R, Y, W, rng);
    CHECK(compose(tensor(g1, g2), tensor(f1, f2)) == tensor(compose(g1, f1), compose(g2, f2)));
  }
}

TEST_CASE("over entire semirings deterministic means a delta of a unique function") {
  Rng rng(106);
  for (auto name : {"rational", "nonneg-rational", "boolean", "chain-3", "tropical"}) {
    SemiringPtr R = builtin(name);
    CAPTURE(name);
    REQUIRE(check_entire(*R).ok());
    for (int trial = 0; trial < 40; ++trial) {
      FinSet A = rand_set("a", rng), X = rand_set("x", rng);
      Kernel f = trial % 2 ? random_det(R, A, X, rng) : random_kernel(R, A, X, rng);
      auto phi = as_function(f);
      CHECK(is_deterministic(f).ok() == phi.has_value());
      if (phi) CHECK(delta(R, *phi) == f);
    }
  }
}

TEST_CASE("deterministic kernels are closed under compose and tensor") {
  Rng rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    SemiringPtr R = trial % 2 ? Q() : builtin("bool-4");
    FinSet A = rand_set("a", rng), X = rand_set("x", rng), Y = rand_set("y", rng);
    Kernel f = random_det(R, A, X, rng), g = random_det(R, X, Y, rng), h = random_det(R, Y, A, rng);
    CHECK(is_deterministic(compose(g, f)).ok());
    CHECK(is_deterministic(tensor(f, h)).ok());
  }
}

TEST_CASE("conditionals reconstruct joints") {
  Rng rng(108);
  for (int trial = 0; trial < 40; ++trial) {
    FinSet A = rand_set("a", rng, 2), X = rand_set("x", rng), Y = rand_set("y", rng);
    Kernel f = random_kernel(N(), A, X * Y, rng);
    SemiringPtr R = N();
    Kernel fx = marginalize(f, {0});
    // (id_X (x) c) after (copy_X (x) id_A) after the bloom of fx
    Kernel bloom = compose(tensor(fx, identity(R, A)), copy(R, A));
    Kernel joint = compose(tensor(identity(R, X), conditional(f, 1)), compose(tensor(copy(R, X), identity(R, A)), bloom));
    CHECK(joint == f);
  }
}

TEST_CASE("constructed dilations always verify") {
  Rng rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    SemiringPtr R = builtin(trial % 3 == 0 ? "rational" : trial % 3 == 1 ? "nonneg-rational" : "boolean");
    Kernel p = random_kernel(R, rand_set("a", rng, 2), rand_set("x", rng), rng);
    for (auto k : {DilationKind::Bloom, DilationKind::Ioc, DilationKind::OutputCopy})
      CHECK(verify_dilation(make_dilation(k, p).total(), p).ok());
    auto fam = dilation_family(p, SearchOptions{2, static_cast<std::uint64_t>(trial), 5, 512});
    for (auto& d : fam.members) CHECK(verify_dilation(d.total(), p).ok());
  }
}

TEST_CASE("mediators compose") {
  Rng rng(110);
  // over signed rationals a cancelling dilation has no mediator from ioc, so nonneg only
  for (int trial = 0; trial < 30; ++trial) {
    SemiringPtr R = N();
    Kernel p = random_kernel(R, rand_set("a", rng, 2), rand_set("x", rng, 2), rng);
    Dilation d1 = make_ioc(p);
    auto fam = dilation_family(p, SearchOptions{2, static_cast<std::uint64_t>(trial), 4, 512});
    const Dilation& d2 = fam.members[draw(rng, fam.members.size())];
    auto m12 = find_dilation_morphism(d1, d2);
    REQUIRE(m12.morphism);
    Kernel g = random_kernel(R, d2.env(), rand_set("f", rng, 2), rng);
    Dilation d3(p, compose(tensor(identity(R, p.cod()), g), d2.total()));
    CHECK(is_dilation_morphism(d2, d3, g));
    CHECK(is_dilation_morphism(d1, d3, compose(g, m12.morphism->map)));
  }
}

TEST_CASE("copying leaked information gives an isomorphic dilation") {
  Rng rng(111);
  for (int trial = 0; trial < 20; ++trial) {
    Kernel p = random_kernel(N(), rand_set("a", rng, 2), rand_set("x", rng, 2), rng);
    auto fam = dilation_family(p, SearchOptions{2, static_cast<std::uint64_t>(trial), 4, 512});
    const Dilation& pi = fam.members[draw(rng, fam.members.size())];
    FinSet X = p.cod(), E = pi.env();
    Kernel cE = copy(N(), E);
    Dilation leaked(p, compose(tensor(identity(N(), X), cE), pi.total()));
    std::vector<std::size_t> first;
    for (std::size_t k = 0; k < E.arity(); ++k) first.push_back(k);
    Kernel drop = marginalize(identity(N(), E * E), first);  // E (x) E -> E keeping the first copy
    CHECK(is_dilation_morphism(pi, leaked, cE));
    CHECK(is_dilation_morphism(leaked, pi, drop));
    CHECK(compose(drop, cE) == identity(N(), E));
    Kernel there_and_back = tensor(identity(N(), X), compose(cE, drop));
    CHECK(dilational_equal(there_and_back, identity(N(), X * E * E), leaked.total()).ok());
  }
}

TEST_CASE("dilational equality implies almost-sure equality") {
  Rng rng(112);
  std::size_t held = 0;
  for (int trial = 0; trial < 500; ++trial) {
    SemiringPtr R = trial % 2 ? Q() : N();
    SupportPair s = support_pair(R, rng);
    Kernel g = trial % 5 == 0 ? random_kernel(R, s.f.dom(), s.f.cod(), rng) : s.g;
    Verdict d = dilational_equal(s.f, g, s.p, SearchOptions{2, static_cast<std::uint64_t>(trial), 4, 512});
    if (d.ok()) {
      ++held;
      CHECK(as_equal(s.f, g, s.p).ok());
    }
  }
  CHECK(held > 0);
}

TEST_CASE("pes holds wherever causality is certified") {
  Rng rng(113);
  for (auto name : {"nonneg-rational", "boolean", "chain-3"}) {
    SemiringPtr R = builtin(name);
    CAPTURE(name);
    REQUIRE(check_causality_criterion(*R).ok());
    for (int trial = 0; trial < 30; ++trial) {
      SupportPair s = support_pair(R, rng);
      AxiomReport r = check_pes_instance(s.f, s.g, s.p, SearchOptions{2, 1, 4, 1u << 12});
      CHECK(r.verdict.ok());
      CHECK(r.consistent);
    }
  }
}

TEST_CASE("dmi holds over zero-sum-free semirings") {
  Rng rng(114);
  for (auto name : {"nonneg-rational", "boolean", "chain-3", "tropical"}) {
    SemiringPtr R = builtin(name);
    CAPTURE(name);
    REQUIRE(check_zerosumfree(*R).ok());
    for (int trial = 0; trial < 15; ++trial) {
      Kernel p = random_det(R, rand_set("a", rng, 2), rand_set("x", rng, 2), rng);
      auto fam = dilation_family(p, SearchOptions{2, static_cast<std::uint64_t>(trial), 6, 256});
      for (auto& d : fam.members) CHECK(check_dmi_instance(d).ok());
    }
  }
}

TEST_CASE("vacuous instances never fail") {
  Rng rng(115);
  std::size_t vacuous = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SemiringPtr R = trial % 2 ? Q() : N();
    FinSet A = rand_set("a", rng, 2), X = rand_set("x", rng), Y = rand_set("y", rng, 2);
    Kernel f = random_kernel(R, A, X, rng), g = random_kernel(R, X, Y, rng);
    AxiomReport pos = check_positivity_instance(f, g);
    if (pos.verdict.vacuous) {
      ++vacuous;
      CHECK_FALSE(pos.verdict.failed());
    }
    Kernel h1 = random_kernel(R, X, Y, rng), h2 = random_kernel(R, X, Y, rng);
    AxiomReport pes = check_pes_instance(h1, h2, f, SearchOptions{2, 0, 0, 256});
    if (pes.verdict.vacuous) {
      ++vacuous;
      CHECK_FALSE(pes.verdict.failed());
    }
  }
  CHECK(vacuous > 0);
}
