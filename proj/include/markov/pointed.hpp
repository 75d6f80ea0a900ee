#pragma once

#include <string>
#include <vector>

#include "markov/verdict.hpp"

namespace markov {

// Pointed sets with arrows reversed: a morphism A -> X is a basepoint-preserving
// function X -> A. The monoidal product is the product set with basepoint (*,*).
class PointedSet {
 public:
  PointedSet();  // the one-point unit
  // labels[0] is the basepoint
  explicit PointedSet(std::vector<std::string> labels);
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool operator==(const PointedSet& o) const { return labels_ == o.labels_; }
  bool operator!=(const PointedSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> labels_;
};

PointedSet pointed_range(const std::string& prefix, std::size_t n);  // {*, prefix1, ..}
// product with pair index x * |E| + e; the basepoint stays at index 0
PointedSet operator*(const PointedSet& a, const PointedSet& b);

struct PointedMap {
  PointedSet dom, cod;
  std::vector<std::size_t> fn;  // fn[cod index] = dom index
  bool operator==(const PointedMap& o) const { return dom == o.dom && cod == o.cod && fn == o.fn; }
};

PointedMap pointed_map(PointedSet dom, PointedSet cod, std::vector<std::size_t> fn);  // checks fn(*) = *
PointedMap compose(const PointedMap& g, const PointedMap& f);  // g after f
PointedMap tensor(const PointedMap& f, const PointedMap& g);
PointedMap identity(const PointedSet& X);
PointedMap discard(const PointedSet& X);  // X -> I
PointedMap constant_basepoint(const PointedSet& A, const PointedSet& X);  // A -> I -> X

// every morphism dom -> cod, i.e. every pointed function cod -> dom
std::vector<PointedMap> all_maps(const PointedSet& dom, const PointedSet& cod);

struct PointedDilation {
  PointedMap base;   // p : A -> X
  PointedSet env;    // E
  PointedMap total;  // pi : A -> X x E
};
// pi(x,*) = p(x)
Verdict verify_pointed_dilation(const PointedDilation& d);
PointedMap marginal_x(const PointedDilation& d);    // x |-> pi(x,*)
PointedMap marginal_env(const PointedDilation& d);  // e |-> pi(*,e)
std::vector<PointedDilation> all_dilations(const PointedMap& p, const PointedSet& env);

// X^X: pointed self-maps of X, basepoint the identity
PointedSet self_maps(const PointedSet& X);
// ev_X : X <- X x X^X, as a dilation of id_X
PointedDilation evaluation(const PointedSet& X);

// pointed maps u : E' -> E (morphisms E -> E') with pi' = pi (id x u)
std::vector<PointedMap> mediators(const PointedDilation& from, const PointedDilation& to);
// every dilation of the base with |E| <= max_env factors through candidate via exactly one mediator
Verdict verify_pointed_initial(const PointedDilation& candidate, std::size_t max_env);
// does pi arise as (p x id_E) iota for some dilation iota : A -> A x E of id_A?
Verdict pointed_noncreative_instance(const PointedDilation& pi);

json pointed_map_json(const PointedMap& f);

}  // namespace markov
