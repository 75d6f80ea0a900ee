#include "markov/properties.hpp"

#include <functional>

#include "markov/errors.hpp"

namespace markov {

namespace {

using Pred = std::function<std::optional<json>(const std::vector<Value>&)>;

struct Search {
  std::vector<Value> candidates;  // element pool
  bool exhaustive = false;
};

// visit all arity-tuples of pool; stop at the first witness
std::optional<json> scan(const std::vector<Value>& pool, std::size_t arity, const Pred& bad) {
  if (pool.empty()) return std::nullopt;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Value> tup(arity);
  while (true) {
    for (std::size_t k = 0; k < arity; ++k) tup[k] = pool[idx[k]];
    if (auto w = bad(tup)) return w;
    std::size_t k = arity;
    while (k > 0) {
      if (++idx[k - 1] < pool.size()) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) return std::nullopt;
  }
}

std::optional<json> sample_scan(const Semiring& R, std::size_t arity, const Strategy& st, const Pred& bad) {
  Rng rng(st.seed);
  std::vector<Value> tup(arity);
  for (std::size_t n = 0; n < st.samples; ++n) {
    for (auto& v : tup) v = R.sample(rng);
    if (auto w = bad(tup)) return w;
  }
  return std::nullopt;
}

// shared driver for the element-level properties
Verdict run(const Semiring& R, Strategy st, std::size_t arity, const std::optional<std::string>& cert,
            const Pred& bad, const std::vector<std::vector<Value>>& seeded = {}) {
  auto elems = R.elements();
  using M = Strategy::Mode;
  for (auto& s : seeded)
    if (auto w = bad(s)) return Verdict::fails(*w).note("seeded witness");
  if (st.mode == M::Exhaustive || (st.mode == M::Auto && elems)) {
    if (!elems) throw UnsupportedError(R.name() + " is infinite; exhaustive search impossible");
    if (auto w = scan(*elems, arity, bad)) return Verdict::fails(*w);
    return Verdict::holds("exhaustive");
  }
  if (st.mode == M::Certified) {
    if (cert) return Verdict::holds("theory:" + *cert);
    return Verdict::unknown(0).note("no certificate for " + R.name());
  }
  // structured pool first: cheap, deterministic, and catches the textbook witnesses
  if (auto w = scan(R.pool(), arity, bad)) {
    Verdict v = Verdict::fails(*w);
    if (cert) v.note("contradicts certificate " + *cert);
    return v;
  }
  if (st.mode == M::Sampled) {
    if (auto w = sample_scan(R, arity, st, bad)) {
      Verdict v = Verdict::fails(*w, "bound:" + std::to_string(st.samples));
      if (cert) v.note("contradicts certificate " + *cert);
      return v;
    }
  }
  if (cert) return Verdict::holds("theory:" + *cert).note("structured pool agrees");
  std::size_t bound = st.mode == M::Sampled ? st.samples : R.pool().size();
  return Verdict::unknown(bound);
}

}  // namespace

std::optional<Value> find_complement(const Value& r) {
  if (!r.owner()) throw UsageError("value without semiring");
  return r.owner()->complement(r);
}

Verdict check_zerosumfree(const Semiring& R, Strategy st) {
  return run(R, st, 2, R.certificates().zerosumfree, [&](const std::vector<Value>& t) -> std::optional<json> {
    auto &r = t[0], &s = t[1];
    if (R.is_zero(R.add(r, s)) && !(R.is_zero(r) && R.is_zero(s)))
      return json{{"r", r.str()}, {"s", s.str()}, {"r+s", R.add(r, s).str()}};
    return std::nullopt;
  });
}

Verdict check_entire(const Semiring& R, Strategy st) {
  if (R.zero() == R.one()) return Verdict::fails(json{{"law", "nontrivial"}, {"zero", R.zero().str()}});
  return run(R, st, 2, R.certificates().entire, [&](const std::vector<Value>& t) -> std::optional<json> {
    auto &r = t[0], &s = t[1];
    if (!R.is_zero(r) && !R.is_zero(s) && R.is_zero(R.mul(r, s)))
      return json{{"r", r.str()}, {"s", s.str()}, {"rs", R.mul(r, s).str()}};
    return std::nullopt;
  });
}

Verdict check_causality_criterion(const Semiring& R, Strategy st) {
  auto has_c = [&](const Value& x) { return R.complement(x).has_value(); };
  Pred bad = [&](const std::vector<Value>& q) -> std::optional<json> {
    auto &s = q[0], &t = q[1], &v = q[2], &w = q[3];
    Value z = R.add(v, w);
    if (!has_c(s) || !has_c(t) || !has_c(z)) return std::nullopt;
    if (R.mul(s, z) != R.mul(t, z)) return std::nullopt;
    Value sv = R.mul(s, v), tv = R.mul(t, v), sw = R.mul(s, w), tw = R.mul(t, w);
    if (sv == tv && sw == tw) return std::nullopt;
    return json{{"s", s.str()},          {"t", t.str()},          {"v", v.str()},   {"w", w.str()},
                {"s(v+w)", R.mul(s, z).str()}, {"t(v+w)", R.mul(t, z).str()}, {"sv", sv.str()}, {"tv", tv.str()},
                {"sw", sw.str()},        {"tw", tw.str()}};
  };
  std::vector<std::vector<Value>> seeded;
  if (R.kind() == Kind::IdealQuantale) {
    Value s = R.parse("(2,4i)"), t = R.parse("(4,2i)");
    seeded.push_back({s, t, s, t});
  }
  return run(R, st, 4, R.certificates().causal, bad, seeded);
}

Verdict check_semiring_axioms(const Semiring& R, Strategy st) {
  if (R.zero() == R.one()) return Verdict::fails(json{{"law", "zero != one"}});
  Value z = R.zero(), o = R.one();
  Pred bad = [&](const std::vector<Value>& t) -> std::optional<json> {
    auto &a = t[0], &b = t[1], &c = t[2];
    auto wit = [&](const char* law) {
      return json{{"law", law}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()}};
    };
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) return wit("add associative");
    if (R.add(a, b) != R.add(b, a)) return wit("add commutative");
    if (R.add(a, z) != a) return wit("add unit");
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) return wit("mul associative");
    if (R.mul(a, b) != R.mul(b, a)) return wit("mul commutative");
    if (R.mul(a, o) != a) return wit("mul unit");
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) return wit("distributive");
    if (R.mul(a, z) != z) return wit("annihilation");
    return std::nullopt;
  };
  if (st.mode == Strategy::Mode::Certified) st.mode = Strategy::Mode::Auto;
  return run(R, st, 3, std::nullopt, bad);
}

Verdict validate_lattice(const FiniteLattice& l) {
  int n = static_cast<int>(l.elements.size());
  auto square = [n](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (auto& row : t) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int x : row)
        if (x < 0 || x >= n) return false;
    }
    return true;
  };
  if (n == 0 || !square(l.join) || !square(l.meet)) throw UsageError("lattice tables are not square and total");
  if (l.bottom < 0 || l.bottom >= n || l.top < 0 || l.top >= n) throw UsageError("lattice bounds out of range");
  auto& J = l.join;
  auto& M = l.meet;
  auto fail = [&](const char* law, std::vector<int> idx) {
    json t = json::array();
    for (int i : idx) t.push_back(l.elements[i]);
    return Verdict::fails(json{{"law", law}, {"elements", t}});
  };
  for (int a = 0; a < n; ++a) {
    if (J[a][a] != a) return fail("join idempotent", {a});
    if (M[a][a] != a) return fail("meet idempotent", {a});
    if (J[a][l.bottom] != a) return fail("bottom unit", {a});
    if (M[a][l.top] != a) return fail("top unit", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (J[a][b] != J[b][a]) return fail("join commutative", {a, b});
      if (M[a][b] != M[b][a]) return fail("meet commutative", {a, b});
      if (J[a][M[a][b]] != a) return fail("absorption", {a, b});
      if (M[a][J[a][b]] != a) return fail("absorption", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (J[J[a][b]][c] != J[a][J[b][c]]) return fail("join associative", {a, b, c});
        if (M[M[a][b]][c] != M[a][M[b][c]]) return fail("meet associative", {a, b, c});
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M[a][J[b][c]] != J[M[a][b]][M[a][c]]) return fail("distributivity", {a, b, c});
  return Verdict::holds("exhaustive");
}

}  // namespace markov
