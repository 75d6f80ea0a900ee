#include "markov/semiring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "markov/errors.hpp"

namespace markov {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::FiniteTable: return "finite-table";
    case Kind::Rational: return "rational";
    case Kind::NonnegRational: return "nonneg-rational";
    case Kind::Boolean: return "boolean";
    case Kind::Tropical: return "tropical";
    case Kind::Lattice: return "lattice";
    case Kind::IdealQuantale: return "ideal-quantale";
  }
  return "?";
}

std::uint64_t draw(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

namespace {

void same_owner(const Value& a, const Value& b) {
  if (a.owner() != b.owner() || a.owner() == nullptr)
    throw UsageError("semiring values from different owners");
}

}  // namespace

bool Value::operator==(const Value& o) const {
  if (owner_ != o.owner_) {
    if (owner_ && o.owner_) throw UsageError("comparing values of " + owner_->name() + " and " + o.owner_->name());
    return false;
  }
  return p_ == o.p_;
}

std::string Value::str() const { return owner_ ? owner_->format(*this) : "<unset>"; }

Value operator+(const Value& a, const Value& b) {
  same_owner(a, b);
  return a.owner()->add(a, b);
}

Value operator*(const Value& a, const Value& b) {
  same_owner(a, b);
  return a.owner()->mul(a, b);
}

std::vector<Value> Semiring::pool() const {
  if (auto e = elements()) return *e;
  return {zero(), one()};
}

Value Semiring::sample(Rng& rng) const {
  auto p = pool();
  return p[draw(rng, p.size())];
}

std::vector<Value> Semiring::split(const Value& v, std::size_t n, Rng& rng) const {
  std::vector<Value> out(n, zero());
  if (n) out[draw(rng, n)] = v;
  return out;
}

std::optional<Value> Semiring::complement(const Value& r) const {
  if (auto e = elements()) {
    for (auto& c : *e)
      if (add(r, c) == one()) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

Value Semiring::div(const Value& a, const Value& b) const {
  if (!has_division()) throw UnsupportedError("semiring " + name() + " has no division");
  Rational d = as_rational(b);
  if (d == 0) throw UsageError("division by zero");
  return from_rational(as_rational(a) / d);
}

Rational Semiring::as_rational(const Value& v) const {
  if (!rational_kind() || !owns(v)) throw UnsupportedError(name() + " values are not rationals");
  return std::get<Rational>(v.payload());
}

Value Semiring::from_rational(const Rational& r) const {
  if (kind_ == Kind::Rational) return Value(this, r);
  if (kind_ == Kind::NonnegRational) {
    if (r < 0) throw UsageError("negative value " + to_string(r) + " in " + name());
    return Value(this, r);
  }
  if (r == 0) return zero();
  if (r == 1) return one();
  throw UnsupportedError("cannot embed " + to_string(r) + " into " + name());
}

Value Semiring::sum(const std::vector<Value>& vs) const {
  Value acc = zero();
  for (auto& v : vs) acc = add(acc, v);
  return acc;
}

namespace {

class RationalSR final : public Semiring {
 public:
  explicit RationalSR(bool nonneg)
      : Semiring(nonneg ? "nonneg-rational" : "rational", nonneg ? Kind::NonnegRational : Kind::Rational),
        nonneg_(nonneg) {
    if (nonneg) {
      certs_.entire = "subsemiring-of-field";
      certs_.zerosumfree = "nonnegative-order";
      certs_.cancellative = "subsemiring-of-field";
      certs_.causal = "cancellative-zerosumfree";
    } else {
      certs_.entire = "field";
      certs_.cancellative = "field";
    }
  }
  Value zero() const override { return Value(this, Rational(0)); }
  Value one() const override { return Value(this, Rational(1)); }
  Value add(const Value& a, const Value& b) const override {
    return Value(this, q(a) + q(b));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(this, q(a) * q(b));
  }
  std::string format(const Value& v) const override { return to_string(q(v)); }
  Value parse(const std::string& s) const override { return from_rational(parse_rational(s)); }

  std::vector<Value> pool() const override {
    std::vector<std::string> lits = nonneg_ ? std::vector<std::string>{"1", "0", "2", "1/2", "1/3", "3", "2/3"}
                                            : std::vector<std::string>{"1", "0", "-1", "2", "1/2", "-2", "-1/2", "1/3", "3"};
    std::vector<Value> out;
    for (auto& l : lits) out.push_back(parse(l));
    return out;
  }
  Value sample(Rng& rng) const override {
    long num = static_cast<long>(draw(rng, nonneg_ ? 5 : 9)) - (nonneg_ ? 0 : 4);
    long den = 1 + static_cast<long>(draw(rng, 4));
    return from_rational(Rational(num, den));
  }
  std::vector<Value> split(const Value& v, std::size_t n, Rng& rng) const override {
    std::vector<Value> out;
    if (n == 0) return out;
    Rational total = q(v);
    if (nonneg_) {
      std::vector<long> w(n);
      long s = 0;
      for (auto& x : w) s += (x = static_cast<long>(draw(rng, 4)));
      if (s == 0) w[draw(rng, n)] = s = 1;
      for (auto x : w) out.push_back(from_rational(total * Rational(x, s)));
      return out;
    }
    Rational acc = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Rational r(static_cast<long>(draw(rng, 7)) - 3, 1 + static_cast<long>(draw(rng, 2)));
      acc += r;
      out.push_back(from_rational(r));
    }
    out.push_back(from_rational(total - acc));
    return out;
  }
  std::optional<Value> complement(const Value& r) const override {
    Rational c = 1 - q(r);
    if (nonneg_ && c < 0) return std::nullopt;
    return from_rational(c);
  }

 private:
  static const Rational& q(const Value& v) { return std::get<Rational>(v.payload()); }
  bool nonneg_;
};

class BooleanSR final : public Semiring {
 public:
  BooleanSR() : Semiring("boolean", Kind::Boolean) {
    certs_.entire = "two-element";
    certs_.zerosumfree = "join-semilattice";
    certs_.causal = "distributive-lattice";
  }
  Value zero() const override { return Value(this, false); }
  Value one() const override { return Value(this, true); }
  Value add(const Value& a, const Value& b) const override { return Value(this, b_(a) || b_(b)); }
  Value mul(const Value& a, const Value& b) const override { return Value(this, b_(a) && b_(b)); }
  std::string format(const Value& v) const override { return b_(v) ? "1" : "0"; }
  Value parse(const std::string& s) const override {
    if (s == "1" || s == "true") return one();
    if (s == "0" || s == "false") return zero();
    throw UsageError("bad boolean literal '" + s + "'");
  }
  std::optional<std::vector<Value>> elements() const override { return std::vector<Value>{zero(), one()}; }
  std::vector<Value> split(const Value& v, std::size_t n, Rng& rng) const override {
    std::vector<Value> out(n, zero());
    if (!b_(v) || n == 0) return out;
    for (auto& x : out) x = Value(this, draw(rng, 2) == 1);
    out[draw(rng, n)] = one();
    return out;
  }

 private:
  static bool b_(const Value& v) { return std::get<bool>(v.payload()); }
};

class TropicalSR final : public Semiring {
 public:
  TropicalSR() : Semiring("tropical", Kind::Tropical) {
    certs_.entire = "max-plus";
    certs_.zerosumfree = "max-plus";
    certs_.cancellative = "max-plus";
    certs_.causal = "cancellative-zerosumfree";
  }
  Value zero() const override { return Value(this, Trop{}); }
  Value one() const override { return Value(this, Trop{false, 0}); }
  Value add(const Value& a, const Value& b) const override {
    auto &x = t(a), &y = t(b);
    if (x.bottom) return b;
    if (y.bottom) return a;
    return Value(this, Trop{false, std::max(x.v, y.v)});
  }
  Value mul(const Value& a, const Value& b) const override {
    auto &x = t(a), &y = t(b);
    if (x.bottom || y.bottom) return zero();
    return Value(this, Trop{false, x.v + y.v});
  }
  std::string format(const Value& v) const override { return t(v).bottom ? "-inf" : to_string(t(v).v); }
  Value parse(const std::string& s) const override {
    if (s == "-inf" || s == "bottom") return zero();
    return Value(this, Trop{false, parse_rational(s)});
  }
  std::vector<Value> pool() const override {
    std::vector<Value> out{zero()};
    for (auto l : {"0", "-1", "1", "-1/2", "2"}) out.push_back(parse(l));
    return out;
  }
  Value sample(Rng& rng) const override {
    if (draw(rng, 6) == 0) return zero();
    return Value(this, Trop{false, Rational(static_cast<long>(draw(rng, 9)) - 4, 1 + static_cast<long>(draw(rng, 2)))});
  }
  std::vector<Value> split(const Value& v, std::size_t n, Rng& rng) const override {
    std::vector<Value> out(n, zero());
    if (n == 0 || t(v).bottom) return out;
    for (auto& x : out)
      if (draw(rng, 3) != 0) x = Value(this, Trop{false, t(v).v - static_cast<long>(draw(rng, 3))});
    out[draw(rng, n)] = v;
    return out;
  }
  std::optional<Value> complement(const Value& r) const override {
    if (t(r).bottom || t(r).v <= 0) return one();
    return std::nullopt;
  }

 private:
  static const Trop& t(const Value& v) { return std::get<Trop>(v.payload()); }
};

class IdealSR final : public Semiring {
 public:
  IdealSR() : Semiring("ideal-z2i", Kind::IdealQuantale) {
    certs_.entire = "ideals-of-a-domain";
    certs_.zerosumfree = "ideal-sum";
  }
  Value zero() const override { return Value(this, Ideal()); }
  Value one() const override { return Value(this, Ideal::unit()); }
  Value add(const Value& a, const Value& b) const override { return Value(this, i(a) + i(b)); }
  Value mul(const Value& a, const Value& b) const override { return Value(this, i(a) * i(b)); }
  std::string format(const Value& v) const override { return i(v).str(); }
  Value parse(const std::string& s) const override { return Value(this, Ideal::parse(s)); }
  std::vector<Value> pool() const override {
    std::vector<Value> out{zero(), one()};
    for (Ideal::Vec g : {Ideal::Vec{2, 0}, Ideal::Vec{0, 1}, Ideal::Vec{1, 1}, Ideal::Vec{3, 0}, Ideal::Vec{2, 1}})
      out.push_back(Value(this, Ideal::principal(g)));
    return out;
  }
  Value sample(Rng& rng) const override {
    auto c = [&] { return static_cast<std::int64_t>(draw(rng, 7)) - 3; };
    std::vector<Ideal::Vec> gens{{c(), c()}};
    if (draw(rng, 2)) gens.push_back({c(), c()});
    return Value(this, Ideal::generated(gens));
  }
  std::vector<Value> split(const Value& v, std::size_t n, Rng& rng) const override {
    std::vector<Value> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(mul(v, sample(rng)));
    if (n) out[draw(rng, n)] = v;
    return out;
  }
  std::optional<Value> complement(const Value&) const override { return one(); }

 private:
  static const Ideal& i(const Value& v) { return std::get<Ideal>(v.payload()); }
};

// shared by lattices and explicit tables: elements are indices
class IndexedSR final : public Semiring {
 public:
  IndexedSR(std::string name, Kind kind, std::vector<std::string> labels, std::vector<std::vector<int>> add,
            std::vector<std::vector<int>> mul, int zero, int one)
      : Semiring(std::move(name), kind), labels_(std::move(labels)), add_(std::move(add)), mul_(std::move(mul)),
        zero_(zero), one_(one) {
    auto n = labels_.size();
    auto square = [n](const std::vector<std::vector<int>>& t) {
      if (t.size() != n) return false;
      for (auto& row : t) {
        if (row.size() != n) return false;
        for (int x : row)
          if (x < 0 || static_cast<std::size_t>(x) >= n) return false;
      }
      return true;
    };
    if (n == 0 || !square(add_) || !square(mul_)) throw UsageError("semiring " + this->name() + ": malformed tables");
    if (zero_ < 0 || one_ < 0 || static_cast<std::size_t>(zero_) >= n || static_cast<std::size_t>(one_) >= n)
      throw UsageError("semiring " + this->name() + ": zero/one out of range");
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw UsageError("semiring " + this->name() + ": duplicate labels");
    if (kind == Kind::Lattice) certs_.causal = "distributive-lattice";
  }
  Value zero() const override { return Value(this, zero_); }
  Value one() const override { return Value(this, one_); }
  Value add(const Value& a, const Value& b) const override { return Value(this, add_[ix(a)][ix(b)]); }
  Value mul(const Value& a, const Value& b) const override { return Value(this, mul_[ix(a)][ix(b)]); }
  std::string format(const Value& v) const override { return labels_[ix(v)]; }
  Value parse(const std::string& s) const override {
    for (std::size_t k = 0; k < labels_.size(); ++k)
      if (labels_[k] == s) return Value(this, static_cast<int>(k));
    throw UsageError("'" + s + "' is not an element of " + name());
  }
  std::optional<std::vector<Value>> elements() const override {
    std::vector<Value> out;
    for (std::size_t k = 0; k < labels_.size(); ++k) out.push_back(Value(this, static_cast<int>(k)));
    return out;
  }
  std::vector<Value> split(const Value& v, std::size_t n, Rng& rng) const override {
    if (kind() != Kind::Lattice) return Semiring::split(v, n, rng);
    std::vector<Value> out;
    auto e = *elements();
    for (std::size_t k = 0; k < n; ++k) out.push_back(mul(v, e[draw(rng, e.size())]));
    if (n) out[draw(rng, n)] = v;
    return out;
  }

 private:
  static int ix(const Value& v) { return std::get<int>(v.payload()); }
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> add_, mul_;
  int zero_, one_;
};

FiniteLattice from_order(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
  int n = static_cast<int>(labels.size());
  FiniteLattice l;
  l.elements = std::move(labels);
  l.join.assign(n, std::vector<int>(n, -1));
  l.meet.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // least upper bound / greatest lower bound by brute force
      for (int c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c)) {
          bool least = true;
          for (int d = 0; d < n; ++d)
            if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
          if (least) l.join[a][b] = c;
        }
        if (leq(c, a) && leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n; ++d)
            if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
          if (greatest) l.meet[a][b] = c;
        }
      }
    }
  for (int c = 0; c < n; ++c) {
    bool is_bottom = true, is_top = true;
    for (int d = 0; d < n; ++d) {
      is_bottom = is_bottom && leq(c, d);
      is_top = is_top && leq(d, c);
    }
    if (is_bottom) l.bottom = c;
    if (is_top) l.top = c;
  }
  return l;
}

}  // namespace

FiniteLattice chain_lattice(int n) {
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back(std::to_string(k));
  return from_order(labels, [](int a, int b) { return a <= b; });
}

FiniteLattice boolean_lattice(int atoms) {
  std::vector<std::string> labels;
  int n = 1 << atoms;
  for (int m = 0; m < n; ++m) {
    std::string s = "{";
    for (int k = 0; k < atoms; ++k)
      if (m & (1 << k)) s += std::string(s.size() > 1 ? "," : "") + static_cast<char>('a' + k);
    labels.push_back(s + "}");
  }
  return from_order(labels, [](int a, int b) { return (a & ~b) == 0; });
}

FiniteLattice divisor_lattice(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> labels;
  for (int d : divs) labels.push_back(std::to_string(d));
  return from_order(labels, [divs](int a, int b) { return divs[b] % divs[a] == 0; });
}

FiniteLattice m3_lattice() {
  // 0 < a, b, c < 1 with pairwise joins 1 and meets 0
  return from_order({"0", "a", "b", "c", "1"}, [](int x, int y) { return x == y || x == 0 || y == 4; });
}

SemiringPtr rational_semiring() {
  static SemiringPtr r = std::make_shared<RationalSR>(false);
  return r;
}
SemiringPtr nonneg_rational_semiring() {
  static SemiringPtr r = std::make_shared<RationalSR>(true);
  return r;
}
SemiringPtr boolean_semiring() {
  static SemiringPtr r = std::make_shared<BooleanSR>();
  return r;
}
SemiringPtr tropical_semiring() {
  static SemiringPtr r = std::make_shared<TropicalSR>();
  return r;
}
SemiringPtr ideal_semiring() {
  static SemiringPtr r = std::make_shared<IdealSR>();
  return r;
}

SemiringPtr lattice_semiring(const std::string& name, const FiniteLattice& l) {
  return std::make_shared<IndexedSR>(name, Kind::Lattice, l.elements, l.join, l.meet, l.bottom, l.top);
}

SemiringPtr table_semiring(const std::string& name, const FiniteTable& t) {
  return std::make_shared<IndexedSR>(name, Kind::FiniteTable, t.elements, t.add, t.mul, t.zero, t.one);
}

std::vector<std::string> builtin_names() {
  return {"rational", "nonneg-rational", "boolean", "tropical", "ideal-z2i", "chain-2", "chain-3",
          "chain-4",  "chain-5",         "bool-4",  "bool-8",   "div-12",    "z2"};
}

SemiringPtr builtin(const std::string& name) {
  static const std::map<std::string, SemiringPtr> table = [] {
    std::map<std::string, SemiringPtr> m;
    m["rational"] = rational_semiring();
    m["nonneg-rational"] = nonneg_rational_semiring();
    m["boolean"] = boolean_semiring();
    m["tropical"] = tropical_semiring();
    m["ideal-z2i"] = ideal_semiring();
    for (int n = 2; n <= 5; ++n) m["chain-" + std::to_string(n)] = lattice_semiring("chain-" + std::to_string(n), chain_lattice(n));
    m["bool-4"] = lattice_semiring("bool-4", boolean_lattice(2));
    m["bool-8"] = lattice_semiring("bool-8", boolean_lattice(3));
    m["div-12"] = lattice_semiring("div-12", divisor_lattice(12));
    m["z2"] = table_semiring("z2", FiniteTable{{"0", "1"}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 1});
    return m;
  }();
  if (name == "signed-rational") return table.at("rational");
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown semiring '" + name + "'");
  return it->second;
}

}  // namespace markov
