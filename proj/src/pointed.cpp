#include "markov/pointed.hpp"

#include <optional>
#include <set>

#include "markov/errors.hpp"

namespace markov {

PointedSet::PointedSet() : labels_{"*"} {}

PointedSet::PointedSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw UsageError("a pointed set needs its basepoint");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw UsageError("pointed set labels must be distinct");
}

PointedSet pointed_range(const std::string& prefix, std::size_t n) {
  if (n == 0) throw UsageError("a pointed set has at least one element");
  std::vector<std::string> l{"*"};
  for (std::size_t i = 1; i < n; ++i) l.push_back(prefix + std::to_string(i));
  return PointedSet(l);
}

PointedSet operator*(const PointedSet& a, const PointedSet& b) {
  std::vector<std::string> l;
  for (auto& x : a.labels())
    for (auto& y : b.labels()) l.push_back("(" + x + "," + y + ")");
  return PointedSet(l);
}

PointedMap pointed_map(PointedSet dom, PointedSet cod, std::vector<std::size_t> fn) {
  if (fn.size() != cod.size()) throw UsageError("pointed map must be total on its codomain");
  for (auto v : fn)
    if (v >= dom.size()) throw UsageError("pointed map value out of range");
  if (fn[0] != 0) throw UsageError("pointed map must send the basepoint to the basepoint");
  return PointedMap{std::move(dom), std::move(cod), std::move(fn)};
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (g.dom != f.cod) throw UsageError("pointed compose: type mismatch");
  std::vector<std::size_t> fn;
  for (auto y : g.fn) fn.push_back(f.fn[y]);
  return PointedMap{f.dom, g.cod, fn};
}

PointedMap tensor(const PointedMap& f, const PointedMap& g) {
  std::vector<std::size_t> fn;
  for (auto x : f.fn)
    for (auto y : g.fn) fn.push_back(x * g.dom.size() + y);
  return PointedMap{f.dom * g.dom, f.cod * g.cod, fn};
}

PointedMap identity(const PointedSet& X) {
  std::vector<std::size_t> fn;
  for (std::size_t i = 0; i < X.size(); ++i) fn.push_back(i);
  return PointedMap{X, X, fn};
}

PointedMap discard(const PointedSet& X) { return PointedMap{X, PointedSet(), {0}}; }

PointedMap constant_basepoint(const PointedSet& A, const PointedSet& X) {
  return PointedMap{A, X, std::vector<std::size_t>(X.size(), 0)};
}

namespace {

// every fn : [n] -> [m] with fn[0] = 0 and fn[i] = fixed[i] where fixed is set
std::vector<std::vector<std::size_t>> functions(std::size_t n, std::size_t m,
                                                const std::vector<std::optional<std::size_t>>& fixed) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(n, 0);
  std::vector<std::size_t> free;
  for (std::size_t i = 1; i < n; ++i) {
    if (fixed[i]) cur[i] = *fixed[i];
    else free.push_back(i);
  }
  while (true) {
    out.push_back(cur);
    std::size_t k = free.size();
    while (k > 0) {
      std::size_t i = free[k - 1];
      if (++cur[i] < m) break;
      cur[i] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> self_map_list(const PointedSet& X) {
  auto all = functions(X.size(), X.size(), std::vector<std::optional<std::size_t>>(X.size()));
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> id;
  for (std::size_t i = 0; i < X.size(); ++i) id.push_back(i);
  out.push_back(id);
  for (auto& f : all)
    if (f != id) out.push_back(f);
  return out;
}

}  // namespace

std::vector<PointedMap> all_maps(const PointedSet& dom, const PointedSet& cod) {
  std::vector<PointedMap> out;
  for (auto& fn : functions(cod.size(), dom.size(), std::vector<std::optional<std::size_t>>(cod.size())))
    out.push_back(PointedMap{dom, cod, fn});
  return out;
}

Verdict verify_pointed_dilation(const PointedDilation& d) {
  const PointedMap &p = d.base, &pi = d.total;
  if (pi.dom != p.dom || pi.cod != p.cod * d.env) throw UsageError("pointed dilation has the wrong shape");
  std::size_t ne = d.env.size();
  for (std::size_t x = 0; x < p.cod.size(); ++x)
    if (pi.fn[x * ne] != p.fn[x])
      return Verdict::fails(json{{"x", p.cod.label(x)},
                                 {"pi(x,*)", pi.dom.label(pi.fn[x * ne])},
                                 {"p(x)", p.dom.label(p.fn[x])}});
  return Verdict::holds();
}

PointedMap marginal_x(const PointedDilation& d) {
  std::vector<std::size_t> fn;
  for (std::size_t x = 0; x < d.base.cod.size(); ++x) fn.push_back(d.total.fn[x * d.env.size()]);
  return PointedMap{d.total.dom, d.base.cod, fn};
}

PointedMap marginal_env(const PointedDilation& d) {
  std::vector<std::size_t> fn;
  for (std::size_t e = 0; e < d.env.size(); ++e) fn.push_back(d.total.fn[e]);
  return PointedMap{d.total.dom, d.env, fn};
}

std::vector<PointedDilation> all_dilations(const PointedMap& p, const PointedSet& env) {
  std::size_t ne = env.size();
  PointedSet cod = p.cod * env;
  std::vector<std::optional<std::size_t>> fixed(cod.size());
  for (std::size_t x = 0; x < p.cod.size(); ++x) fixed[x * ne] = p.fn[x];
  std::vector<PointedDilation> out;
  for (auto& fn : functions(cod.size(), p.dom.size(), fixed)) out.push_back({p, env, PointedMap{p.dom, cod, fn}});
  return out;
}

PointedSet self_maps(const PointedSet& X) {
  std::vector<std::string> l;
  for (auto& f : self_map_list(X)) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + X.label(f[i]);
    l.push_back(s + "]");
  }
  return PointedSet(l);
}

PointedDilation evaluation(const PointedSet& X) {
  auto maps = self_map_list(X);
  PointedSet E = self_maps(X);
  std::vector<std::size_t> fn;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (auto& phi : maps) fn.push_back(phi[x]);
  return PointedDilation{identity(X), E, PointedMap{X, X * E, fn}};
}

std::vector<PointedMap> mediators(const PointedDilation& from, const PointedDilation& to) {
  if (!(from.base == to.base)) throw UsageError("mediators: dilations of different morphisms");
  std::size_t nx = from.base.cod.size(), ne = from.env.size(), nf = to.env.size();
  // u(f) may be any e whose slice pi(., e) equals pi'(., f)
  std::vector<std::vector<std::size_t>> options(nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t e = 0; e < ne; ++e) {
      if (f == 0 && e != 0) continue;
      bool same = true;
      for (std::size_t x = 0; x < nx && same; ++x) same = from.total.fn[x * ne + e] == to.total.fn[x * nf + f];
      if (same) options[f].push_back(e);
    }
  std::vector<PointedMap> out;
  for (auto& o : options)
    if (o.empty()) return out;
  std::vector<std::size_t> pick(nf, 0);
  while (true) {
    std::vector<std::size_t> fn;
    for (std::size_t f = 0; f < nf; ++f) fn.push_back(options[f][pick[f]]);
    out.push_back(PointedMap{from.env, to.env, fn});
    std::size_t k = nf;
    while (k > 0) {
      if (++pick[k - 1] < options[k - 1].size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

Verdict verify_pointed_initial(const PointedDilation& cand, std::size_t max_env) {
  std::size_t checked = 0, unfactorable = 0, unfactorable_trivial_env = 0;
  json first;
  for (std::size_t k = 1; k <= max_env; ++k)
    for (auto& d : all_dilations(cand.base, pointed_range("e", k))) {
      ++checked;
      auto med = mediators(cand, d);
      if (med.size() == 1) continue;
      ++unfactorable;
      PointedMap env = marginal_env(d);
      bool trivial = env == constant_basepoint(env.dom, env.cod);
      if (trivial) ++unfactorable_trivial_env;
      if (first.is_null())
        first = json{{"dilation", pointed_map_json(d.total)},
                     {"reason", med.empty() ? "no mediator" : "mediator not unique"},
                     {"mediators", med.size()}};
    }
  if (first.is_null())
    return Verdict::holds().note(std::to_string(checked) + " dilations with |E| <= " + std::to_string(max_env) +
                                 " factor uniquely");
  first["checked"] = checked;
  first["unfactorable"] = unfactorable;
  // failures among dilations whose environment marginal is the constant basepoint
  first["unfactorable_with_trivial_env_marginal"] = unfactorable_trivial_env;
  return Verdict::fails(first);
}

Verdict pointed_noncreative_instance(const PointedDilation& d) {
  const PointedMap& p = d.base;
  PointedMap idA = identity(p.dom);
  PointedMap lift = tensor(p, identity(d.env));
  std::size_t tried = 0;
  for (auto& iota : all_dilations(idA, d.env)) {
    ++tried;
    if (compose(lift, iota.total) == d.total)
      return Verdict::holds().note("factors through " + pointed_map_json(iota.total).dump());
  }
  return Verdict::fails(json{{"dilation", pointed_map_json(d.total)},
                             {"reason", "no dilation of the identity produces it"},
                             {"tried", tried}});
}

json pointed_map_json(const PointedMap& f) {
  json m = json::object();
  for (std::size_t y = 0; y < f.cod.size(); ++y) m[f.cod.label(y)] = f.dom.label(f.fn[y]);
  return json{{"dom", f.dom.labels()}, {"cod", f.cod.labels()}, {"map", m}};
}

}  // namespace markov
