#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/semiring.hpp"
#include "markov/verdict.hpp"

namespace markov {

// A finite set presented as a formal tensor of atomic factors. Tensors flatten,
// so X (x) I = X and the unit is the empty tensor with the single label "•".
class FinSet {
 public:
  FinSet();  // unit
  static FinSet atom(std::vector<std::string> labels);
  static FinSet unit() { return FinSet(); }
  static FinSet product(const std::vector<FinSet>& parts);

  std::size_t size() const { return labels_.size(); }
  std::size_t arity() const { return atoms_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;
  FinSet factor(std::size_t k) const;
  // tensor of the selected factors, in the given order
  FinSet sub(const std::vector<std::size_t>& keep) const;

  std::vector<std::size_t> split(std::size_t i) const;
  std::size_t join(const std::vector<std::size_t>& parts) const;

  bool operator==(const FinSet& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const FinSet& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void rebuild();
  std::vector<std::vector<std::string>> atoms_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
};

FinSet operator*(const FinSet& a, const FinSet& b);  // tensor
FinSet range_set(const std::string& prefix, std::size_t n);  // {prefix1, .., prefixn}

// a morphism of Kl(D_R): f(x|a) with every column summing to one
class Kernel {
 public:
  using Entry = std::function<Value(std::size_t x, std::size_t a)>;

  Kernel(SemiringPtr R, FinSet dom, FinSet cod, std::vector<Value> entries);
  static Kernel build(SemiringPtr R, FinSet dom, FinSet cod, const Entry& f);
  // entries["a"]["x"] as literals; missing entries are zero
  static Kernel from_columns(SemiringPtr R, FinSet dom, FinSet cod,
                             const std::vector<std::vector<std::string>>& columns);

  const SemiringPtr& semiring() const { return R_; }
  const Semiring& R() const { return *R_; }
  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const Value& operator()(std::size_t x, std::size_t a) const { return e_[x * dom_.size() + a]; }
  const Value& at(const std::string& x, const std::string& a) const;
  const std::vector<Value>& entries() const { return e_; }

  bool operator==(const Kernel& o) const;
  bool operator!=(const Kernel& o) const { return !(*this == o); }
  std::string str() const;

 private:
  SemiringPtr R_;
  FinSet dom_, cod_;
  std::vector<Value> e_;
};

struct DetFunction {
  FinSet dom, cod;
  std::vector<std::size_t> map;  // dom index -> cod index
};

Kernel compose(const Kernel& g, const Kernel& f);  // g after f
Kernel tensor(const Kernel& f, const Kernel& g);

Kernel identity(SemiringPtr R, const FinSet& X);
Kernel copy(SemiringPtr R, const FinSet& X);
Kernel discard(SemiringPtr R, const FinSet& X);
Kernel swap(SemiringPtr R, const FinSet& X, const FinSet& Y);
Kernel delta(SemiringPtr R, const DetFunction& phi);
Kernel point(SemiringPtr R, const FinSet& X, std::size_t x);  // delta_x : I -> X
// reorder the factors of X: output factor k is input factor perm[k]
Kernel permutation(SemiringPtr R, const FinSet& X, const std::vector<std::size_t>& perm);

Kernel marginalize(const Kernel& f, const std::vector<std::size_t>& keep);

// f(x1|a) f(x2|a) = [x1 = x2] f(x1|a)
Verdict is_deterministic(const Kernel& f);
// delta form: every column is a point mass
std::optional<DetFunction> as_function(const Kernel& f);

// m(x|t) f(y|x) = m(x|t) g(y|x)
Verdict as_equal(const Kernel& f, const Kernel& g, const Kernel& m);

// f : A -> X (x) Y with X the first nx factors of the codomain; returns X (x) A -> Y
Kernel conditional(const Kernel& f, std::size_t nx = 1);

json kernel_json(const Kernel& f);

// columns drawn with Semiring::split of one
Kernel random_kernel(SemiringPtr R, const FinSet& dom, const FinSet& cod, Rng& rng);

}  // namespace markov
