#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "markov/ideal.hpp"
#include "markov/rational.hpp"

namespace markov {

enum class Kind { FiniteTable, Rational, NonnegRational, Boolean, Tropical, Lattice, IdealQuantale };
std::string kind_name(Kind k);

// max-plus value: bottom is -infinity (the semiring zero)
struct Trop {
  bool bottom = true;
  Rational v;
  bool operator==(const Trop& o) const { return bottom == o.bottom && (bottom || v == o.v); }
};

using Payload = std::variant<Rational, bool, Trop, int, Ideal>;

class Semiring;

class Value {
 public:
  Value() = default;
  Value(const Semiring* owner, Payload p) : owner_(owner), p_(std::move(p)) {}
  const Semiring* owner() const { return owner_; }
  const Payload& payload() const { return p_; }
  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  std::string str() const;

 private:
  const Semiring* owner_ = nullptr;
  Payload p_;
};

Value operator+(const Value& a, const Value& b);
Value operator*(const Value& a, const Value& b);

using Rng = std::mt19937_64;
std::uint64_t draw(Rng& rng, std::uint64_t n);  // uniform-ish in [0, n)

// theory tags for properties that hold by construction
struct Certificates {
  std::optional<std::string> entire, zerosumfree, causal, cancellative;
};

class Semiring {
 public:
  Semiring(std::string name, Kind kind) : name_(std::move(name)), kind_(kind) {}
  virtual ~Semiring() = default;
  Semiring(const Semiring&) = delete;
  Semiring& operator=(const Semiring&) = delete;

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  const Certificates& certificates() const { return certs_; }

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual std::string format(const Value& v) const = 0;
  virtual Value parse(const std::string& s) const = 0;

  // element list for finite kinds
  virtual std::optional<std::vector<Value>> elements() const { return std::nullopt; }
  // small canonical elements used by structured searches of infinite kinds
  virtual std::vector<Value> pool() const;
  virtual Value sample(Rng& rng) const;
  // n values summing to v
  virtual std::vector<Value> split(const Value& v, std::size_t n, Rng& rng) const;
  virtual std::optional<Value> complement(const Value& r) const;

  bool rational_kind() const { return kind_ == Kind::Rational || kind_ == Kind::NonnegRational; }
  bool has_division() const { return rational_kind(); }
  Value div(const Value& a, const Value& b) const;
  Rational as_rational(const Value& v) const;
  Value from_rational(const Rational& r) const;
  Value from_int(long n) const { return from_rational(Rational(n)); }

  Value sum(const std::vector<Value>& vs) const;
  bool is_zero(const Value& v) const { return v == zero(); }
  bool owns(const Value& v) const { return v.owner() == this; }

 protected:
  Certificates certs_;

 private:
  std::string name_;
  Kind kind_;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

struct FiniteLattice {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> join, meet;
  int bottom = 0, top = 0;
};

FiniteLattice chain_lattice(int n);
FiniteLattice boolean_lattice(int atoms);
FiniteLattice divisor_lattice(int n);
FiniteLattice m3_lattice();

struct FiniteTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> add, mul;
  int zero = 0, one = 1;
};

SemiringPtr rational_semiring();
SemiringPtr nonneg_rational_semiring();
SemiringPtr boolean_semiring();
SemiringPtr tropical_semiring();
SemiringPtr ideal_semiring();
SemiringPtr lattice_semiring(const std::string& name, const FiniteLattice& l);
SemiringPtr table_semiring(const std::string& name, const FiniteTable& t);

// builtin names: rational, nonneg-rational, boolean, tropical, ideal-z2i,
// chain-2..chain-5, bool-4, bool-8, div-12, z2
std::vector<std::string> builtin_names();
SemiringPtr builtin(const std::string& name);  // throws UsageError on unknown names

}  // namespace markov
