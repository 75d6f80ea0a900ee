#pragma once

#include <string>
#include <utility>
#include <vector>

#include "markov/dilation.hpp"
#include "markov/properties.hpp"

namespace markov {

struct AxiomReport {
  std::string axiom;
  std::vector<std::string> inputs;
  Verdict verdict;
  // other formulations of the same statement; a disagreement clears consistent
  std::vector<std::pair<std::string, Verdict>> cross_checks;
  bool consistent = true;
  json stats;  // audits only
};

json to_json(const AxiomReport& r);

// if g f is deterministic: g(y|x) f(x|a) = (g f)(y|a) f(x|a)
AxiomReport check_positivity_instance(const Kernel& f, const Kernel& g);
// if h1 p = h2 p: h1 ~ h2 up to dilations of p
AxiomReport check_pes_instance(const Kernel& h1, const Kernel& h2, const Kernel& p, const SearchOptions& opt = {});
// positivity with equalities replaced by p-almost sure ones
AxiomReport check_relative_positivity_instance(const Kernel& f, const Kernel& g, const Kernel& p);

struct AuditOptions {
  std::size_t size_bound = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 500;
};
// DMI, deterministic-in-X and positivity run on the same random instances must agree;
// over a zerosumfree semiring none of them may fail
AxiomReport audit_equivalences(SemiringPtr R, const AuditOptions& opt = {});
// causality criterion Holds => zerosumfree Holds, over the named semirings
AxiomReport audit_meta_implication(const std::vector<std::string>& names, Strategy st = {});

// matrix rank over the rationals (rational kinds only)
std::size_t rational_rank(const Kernel& f);
// every entry nonnegative (rational kinds only)
bool is_stochastic(const Kernel& f);

}  // namespace markov
