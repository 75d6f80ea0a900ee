#pragma once

#include <optional>
#include <vector>

#include "markov/kernel.hpp"
#include "markov/verdict.hpp"

namespace markov {

// pi : A -> X (x) E with X-marginal equal to base
class Dilation {
 public:
  Dilation(Kernel base, Kernel total);  // throws UsageError if the marginal is wrong
  const Kernel& base() const { return base_; }
  const Kernel& total() const { return total_; }
  const FinSet& env() const { return env_; }
  std::size_t nx() const { return base_.cod().arity(); }
  Kernel env_marginal() const;

 private:
  Kernel base_, total_;
  FinSet env_;
};

struct DilationMorphism {
  Dilation source, target;
  Kernel map;  // E -> E'
};

struct SearchOptions {
  std::size_t max_env = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 200;  // seeded random dilations
  std::size_t enum_cap = 1u << 16;
};

Verdict verify_dilation(const Kernel& total, const Kernel& base);

enum class DilationKind { Bloom, Ioc, OutputCopy };
Dilation make_dilation(DilationKind kind, const Kernel& p);
Dilation make_bloom(const Kernel& p);
Dilation make_ioc(const Kernel& p);
Dilation make_output_copy(const Kernel& p);
// pi(x,e|a) = k(x|e) m(e|a); requires k after m = p
Dilation make_from_decomposition(const Kernel& p, const Kernel& m, const Kernel& k);

// pi(x,e|a) = p(x|a) pi_E(e|a), for deterministic base p
Verdict check_dmi_instance(const Dilation& d);
// [x1 = x2] q(x2,e|a) = q_X(x1|a) q(x2,e|a); X is the first nx codomain factors
Verdict is_deterministic_in(const Kernel& q, std::size_t nx = 1);

// dilations of p used by the bounded searches: structured members first, then seeded random ones.
// For finite semirings small enough to enumerate, every dilation with |E| <= max_env is listed and
// exhaustive is set.
struct DilationFamily {
  std::vector<Dilation> members;
  std::vector<std::string> origin;
  bool exhaustive = false;
};
DilationFamily dilation_family(const Kernel& p, const SearchOptions& opt);

// h1 ~ h2 up to dilations of p
Verdict dilational_equal(const Kernel& f, const Kernel& g, const Kernel& p, const SearchOptions& opt = {});
// the consequent of the strengthening for one given dilation: f(y|x) pi(x,e|a) = g(y|x) pi(x,e|a)
Verdict dilation_separates(const Kernel& f, const Kernel& g, const Dilation& pi);

struct MorphismSearch {
  Verdict verdict;  // Holds: mediator found; Fails: none exists; UnknownUpTo: search incomplete
  std::optional<DilationMorphism> morphism;
  std::vector<Kernel> alternatives;  // further mediators (enumerated, or along free directions)
};
MorphismSearch find_dilation_morphism(const Dilation& source, const Dilation& target,
                                      const SearchOptions& opt = {});
// morphism equation (id_X (x) f) pi = pi'
bool is_dilation_morphism(const Dilation& source, const Dilation& target, const Kernel& f);

Verdict verify_initial(const Dilation& candidate, const SearchOptions& opt = {});
Verdict is_noncreative(const Kernel& p, const SearchOptions& opt = {});

struct BroadcastReport {
  std::vector<Kernel> solutions;  // copy first
  std::size_t dimension = 0;      // affine dimension of the solution set (rational kinds)
  Verdict unique;                 // Holds iff copy is the only broadcasting morphism
};
BroadcastReport find_broadcasting(SemiringPtr R, const FinSet& X, const SearchOptions& opt = {});
Verdict is_broadcasting(const Kernel& b);

}  // namespace markov
