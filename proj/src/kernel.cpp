#include "markov/kernel.hpp"

#include <algorithm>
#include <set>

#include "markov/errors.hpp"

namespace markov {

FinSet::FinSet() { rebuild(); }

FinSet FinSet::atom(std::vector<std::string> labels) {
  if (labels.empty()) throw UsageError("empty finite set");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw UsageError("duplicate labels in finite set");
  FinSet s;
  s.atoms_ = {std::move(labels)};
  s.rebuild();
  return s;
}

FinSet FinSet::product(const std::vector<FinSet>& parts) {
  FinSet s;
  for (auto& p : parts) s.atoms_.insert(s.atoms_.end(), p.atoms_.begin(), p.atoms_.end());
  s.rebuild();
  return s;
}

void FinSet::rebuild() {
  labels_.clear();
  index_.clear();
  if (atoms_.empty()) {
    labels_ = {"•"};
  } else if (atoms_.size() == 1) {
    labels_ = atoms_[0];
  } else {
    std::size_t n = 1;
    for (auto& a : atoms_) n *= a.size();
    labels_.reserve(n);
    std::vector<std::size_t> idx(atoms_.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::string l = "(";
      for (std::size_t k = 0; k < atoms_.size(); ++k) l += (k ? "," : "") + atoms_[k][idx[k]];
      labels_.push_back(l + ")");
      for (std::size_t k = atoms_.size(); k-- > 0;) {
        if (++idx[k] < atoms_[k].size()) break;
        idx[k] = 0;
      }
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
}

std::size_t FinSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UsageError("unknown label '" + label + "' in " + str());
  return it->second;
}

FinSet FinSet::factor(std::size_t k) const {
  if (k >= atoms_.size()) throw UsageError("factor index " + std::to_string(k) + " out of range");
  return atom(atoms_[k]);
}

FinSet FinSet::sub(const std::vector<std::size_t>& keep) const {
  FinSet s;
  for (auto k : keep) {
    if (k >= atoms_.size()) throw UsageError("factor index " + std::to_string(k) + " out of range");
    s.atoms_.push_back(atoms_[k]);
  }
  s.rebuild();
  return s;
}

std::vector<std::size_t> FinSet::split(std::size_t i) const {
  std::vector<std::size_t> out(atoms_.size());
  for (std::size_t k = atoms_.size(); k-- > 0;) {
    out[k] = i % atoms_[k].size();
    i /= atoms_[k].size();
  }
  return out;
}

std::size_t FinSet::join(const std::vector<std::size_t>& parts) const {
  std::size_t i = 0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) i = i * atoms_[k].size() + parts[k];
  return i;
}

std::string FinSet::str() const {
  if (atoms_.empty()) return "I";
  std::string s;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (k) s += "⊗";
    s += "{";
    for (std::size_t j = 0; j < atoms_[k].size(); ++j) s += (j ? "," : "") + atoms_[k][j];
    s += "}";
  }
  return s;
}

FinSet operator*(const FinSet& a, const FinSet& b) { return FinSet::product({a, b}); }

FinSet range_set(const std::string& prefix, std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back(prefix + std::to_string(i));
  return FinSet::atom(l);
}

Kernel::Kernel(SemiringPtr R, FinSet dom, FinSet cod, std::vector<Value> entries)
    : R_(std::move(R)), dom_(std::move(dom)), cod_(std::move(cod)), e_(std::move(entries)) {
  if (!R_) throw UsageError("kernel without semiring");
  if (e_.size() != dom_.size() * cod_.size()) throw UsageError("kernel entry count does not match its type");
  for (auto& v : e_)
    if (!R_->owns(v)) throw UsageError("kernel entry from a different semiring than " + R_->name());
  for (std::size_t a = 0; a < dom_.size(); ++a) {
    Value s = R_->zero();
    for (std::size_t x = 0; x < cod_.size(); ++x) s = R_->add(s, (*this)(x, a));
    if (s != R_->one())
      throw UsageError("column '" + dom_.label(a) + "' sums to " + s.str() + ", not one");
  }
}

Kernel Kernel::build(SemiringPtr R, FinSet dom, FinSet cod, const Entry& f) {
  std::vector<Value> e(dom.size() * cod.size());
  for (std::size_t x = 0; x < cod.size(); ++x)
    for (std::size_t a = 0; a < dom.size(); ++a) e[x * dom.size() + a] = f(x, a);
  return Kernel(std::move(R), std::move(dom), std::move(cod), std::move(e));
}

Kernel Kernel::from_columns(SemiringPtr R, FinSet dom, FinSet cod,
                            const std::vector<std::vector<std::string>>& columns) {
  if (columns.size() != dom.size()) throw UsageError("column count does not match domain");
  for (auto& c : columns)
    if (c.size() != cod.size()) throw UsageError("column length does not match codomain");
  const Semiring& S = *R;
  return build(R, dom, cod, [&](std::size_t x, std::size_t a) { return S.parse(columns[a][x]); });
}

const Value& Kernel::at(const std::string& x, const std::string& a) const {
  return (*this)(cod_.index_of(x), dom_.index_of(a));
}

bool Kernel::operator==(const Kernel& o) const {
  return R_ == o.R_ && dom_ == o.dom_ && cod_ == o.cod_ && e_ == o.e_;
}

std::string Kernel::str() const {
  std::string s = dom_.str() + " -> " + cod_.str() + " over " + R_->name() + "\n";
  for (std::size_t a = 0; a < dom_.size(); ++a) {
    s += "  " + dom_.label(a) + ":";
    for (std::size_t x = 0; x < cod_.size(); ++x) s += " " + cod_.label(x) + "=" + (*this)(x, a).str();
    s += "\n";
  }
  return s;
}

namespace {

void same_semiring(const Kernel& f, const Kernel& g) {
  if (f.semiring() != g.semiring()) throw UsageError("kernels over different semirings");
}

}  // namespace

Kernel compose(const Kernel& g, const Kernel& f) {
  same_semiring(f, g);
  if (f.cod() != g.dom())
    throw UsageError("cannot compose: " + f.cod().str() + " is not " + g.dom().str());
  const Semiring& R = f.R();
  return Kernel::build(f.semiring(), f.dom(), g.cod(), [&](std::size_t z, std::size_t a) {
    Value s = R.zero();
    for (std::size_t x = 0; x < f.cod().size(); ++x) s = R.add(s, R.mul(g(z, x), f(x, a)));
    return s;
  });
}

Kernel tensor(const Kernel& f, const Kernel& g) {
  same_semiring(f, g);
  const Semiring& R = f.R();
  std::size_t nb = g.dom().size(), ny = g.cod().size();
  return Kernel::build(f.semiring(), f.dom() * g.dom(), f.cod() * g.cod(), [&](std::size_t xy, std::size_t ab) {
    return R.mul(f(xy / ny, ab / nb), g(xy % ny, ab % nb));
  });
}

Kernel identity(SemiringPtr R, const FinSet& X) {
  const Semiring& S = *R;
  return Kernel::build(R, X, X, [&](std::size_t x, std::size_t a) { return x == a ? S.one() : S.zero(); });
}

Kernel copy(SemiringPtr R, const FinSet& X) {
  const Semiring& S = *R;
  std::size_t n = X.size();
  return Kernel::build(R, X, X * X, [&](std::size_t xx, std::size_t a) {
    return (xx / n == a && xx % n == a) ? S.one() : S.zero();
  });
}

Kernel discard(SemiringPtr R, const FinSet& X) {
  const Semiring& S = *R;
  return Kernel::build(R, X, FinSet::unit(), [&](std::size_t, std::size_t) { return S.one(); });
}

Kernel swap(SemiringPtr R, const FinSet& X, const FinSet& Y) {
  const Semiring& S = *R;
  std::size_t nx = X.size(), ny = Y.size();
  return Kernel::build(R, X * Y, Y * X, [&](std::size_t yx, std::size_t xy) {
    return (yx / nx == xy % ny && yx % nx == xy / ny) ? S.one() : S.zero();
  });
}

Kernel delta(SemiringPtr R, const DetFunction& phi) {
  if (phi.map.size() != phi.dom.size()) throw UsageError("function is not total");
  for (auto y : phi.map)
    if (y >= phi.cod.size()) throw UsageError("function value out of range");
  const Semiring& S = *R;
  return Kernel::build(R, phi.dom, phi.cod,
                       [&](std::size_t x, std::size_t a) { return phi.map[a] == x ? S.one() : S.zero(); });
}

Kernel point(SemiringPtr R, const FinSet& X, std::size_t x) {
  return delta(std::move(R), DetFunction{FinSet::unit(), X, {x}});
}

Kernel permutation(SemiringPtr R, const FinSet& X, const std::vector<std::size_t>& perm) {
  if (perm.size() != X.arity()) throw UsageError("permutation length does not match arity");
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k) throw UsageError("not a permutation");
  FinSet Y = X.sub(perm);
  const Semiring& S = *R;
  return Kernel::build(R, X, Y, [&](std::size_t y, std::size_t x) {
    auto xs = X.split(x);
    std::vector<std::size_t> ys(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) ys[k] = xs[perm[k]];
    return Y.join(ys) == y ? S.one() : S.zero();
  });
}

Kernel marginalize(const Kernel& f, const std::vector<std::size_t>& keep) {
  std::set<std::size_t> seen(keep.begin(), keep.end());
  if (seen.size() != keep.size()) throw UsageError("repeated factor in marginal");
  FinSet Y = f.cod().sub(keep);
  const Semiring& R = f.R();
  std::vector<Value> e(Y.size() * f.dom().size(), R.zero());
  for (std::size_t x = 0; x < f.cod().size(); ++x) {
    auto xs = f.cod().split(x);
    std::vector<std::size_t> ys;
    for (auto k : keep) ys.push_back(xs[k]);
    std::size_t y = Y.join(ys);
    for (std::size_t a = 0; a < f.dom().size(); ++a) {
      auto& slot = e[y * f.dom().size() + a];
      slot = R.add(slot, f(x, a));
    }
  }
  return Kernel(f.semiring(), f.dom(), Y, std::move(e));
}

Verdict is_deterministic(const Kernel& f) {
  const Semiring& R = f.R();
  for (std::size_t a = 0; a < f.dom().size(); ++a)
    for (std::size_t x1 = 0; x1 < f.cod().size(); ++x1)
      for (std::size_t x2 = 0; x2 < f.cod().size(); ++x2) {
        Value lhs = R.mul(f(x1, a), f(x2, a));
        Value rhs = x1 == x2 ? f(x1, a) : R.zero();
        if (lhs != rhs)
          return Verdict::fails(json{{"a", f.dom().label(a)},
                                     {"x1", f.cod().label(x1)},
                                     {"x2", f.cod().label(x2)},
                                     {"lhs", lhs.str()},
                                     {"rhs", rhs.str()}});
      }
  return Verdict::holds();
}

std::optional<DetFunction> as_function(const Kernel& f) {
  const Semiring& R = f.R();
  DetFunction phi{f.dom(), f.cod(), {}};
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    std::optional<std::size_t> hit;
    for (std::size_t x = 0; x < f.cod().size(); ++x) {
      const Value& v = f(x, a);
      if (v == R.one() && !hit)
        hit = x;
      else if (!R.is_zero(v))
        return std::nullopt;
    }
    if (!hit) return std::nullopt;
    phi.map.push_back(*hit);
  }
  return phi;
}

Verdict as_equal(const Kernel& f, const Kernel& g, const Kernel& m) {
  same_semiring(f, g);
  same_semiring(f, m);
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw UsageError("as_equal: f and g have different types");
  if (m.cod() != f.dom()) throw UsageError("as_equal: m does not land in the domain of f");
  const Semiring& R = f.R();
  for (std::size_t t = 0; t < m.dom().size(); ++t)
    for (std::size_t x = 0; x < m.cod().size(); ++x)
      for (std::size_t y = 0; y < f.cod().size(); ++y) {
        Value lhs = R.mul(m(x, t), f(y, x)), rhs = R.mul(m(x, t), g(y, x));
        if (lhs != rhs)
          return Verdict::fails(json{{"theta", m.dom().label(t)},
                                     {"x", m.cod().label(x)},
                                     {"y", f.cod().label(y)},
                                     {"lhs", lhs.str()},
                                     {"rhs", rhs.str()}});
      }
  return Verdict::holds();
}

Kernel conditional(const Kernel& f, std::size_t nx) {
  const Semiring& R = f.R();
  if (!R.has_division()) throw UnsupportedError("conditionals need division; " + R.name() + " has none");
  std::size_t n = f.cod().arity();
  if (nx == 0 || nx >= n) throw UsageError("conditional needs a codomain X (x) Y with both parts nonempty");
  std::vector<std::size_t> xs, ys;
  for (std::size_t k = 0; k < n; ++k) (k < nx ? xs : ys).push_back(k);
  FinSet X = f.cod().sub(xs), Y = f.cod().sub(ys), A = f.dom();
  Kernel fx = marginalize(f, xs);
  std::size_t na = A.size(), ny = Y.size();
  // a zero-mass row with nonzero entries (signed mass cancelling) has no conditional
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < X.size(); ++x)
      if (R.is_zero(fx(x, a)))
        for (std::size_t y = 0; y < ny; ++y)
          if (!R.is_zero(f(x * ny + y, a)))
            throw UnsupportedError("no conditional: mass at (" + X.label(x) + "," + Y.label(y) + "|" + A.label(a) +
                                   ") cancels in the marginal");
  return Kernel::build(f.semiring(), X * A, Y, [&](std::size_t y, std::size_t xa) {
    std::size_t x = xa / na, a = xa % na;
    const Value& mass = fx(x, a);
    if (R.is_zero(mass)) return y == 0 ? R.one() : R.zero();
    return R.div(f(x * ny + y, a), mass);
  });
}

json kernel_json(const Kernel& f) {
  auto set_json = [](const FinSet& s) {
    json j = json::array();
    for (std::size_t k = 0; k < s.arity(); ++k) j.push_back(s.factor(k).labels());
    return j;
  };
  json j;
  j["semiring"] = f.R().name();
  j["dom"] = f.dom().arity() == 1 ? json(f.dom().labels()) : set_json(f.dom());
  j["cod"] = set_json(f.cod());
  json entries = json::object();
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    json col = json::object();
    for (std::size_t x = 0; x < f.cod().size(); ++x)
      if (!f.R().is_zero(f(x, a))) col[f.cod().label(x)] = f(x, a).str();
    entries[f.dom().label(a)] = col;
  }
  j["entries"] = entries;
  return j;
}

Kernel random_kernel(SemiringPtr R, const FinSet& dom, const FinSet& cod, Rng& rng) {
  std::vector<std::vector<Value>> cols;
  for (std::size_t a = 0; a < dom.size(); ++a) cols.push_back(R->split(R->one(), cod.size(), rng));
  return Kernel::build(R, dom, cod, [&](std::size_t x, std::size_t a) { return cols[a][x]; });
}

}  // namespace markov
