#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/kernel.hpp"
#include "markov/linsolve.hpp"

namespace markov {

// unknown kernel dom -> cod; variable index of entry (x|a) is x * |dom| + a
struct LinearTerm {
  std::size_t var;
  Value coeff;
};
struct LinearEq {
  std::vector<LinearTerm> terms;
  Value rhs;
};

struct KernelSystem {
  SemiringPtr R;
  FinSet dom, cod;
  std::vector<LinearEq> eqs;  // column normalisation is added by the solver

  std::size_t var(std::size_t x, std::size_t a) const { return x * dom.size() + a; }
};

struct SystemSolution {
  enum class Status { Found, None, Unknown };
  Status status = Status::Unknown;
  std::vector<Kernel> solutions;  // a witness; every solution when enumerated
  bool exhaustive = false;        // finite enumeration ran to completion
  std::optional<AffineSolution> affine;  // rational kinds
  std::string method;
};

SystemSolution solve(const KernelSystem& sys, std::size_t enum_cap = 1u << 18);

// extreme values of one variable over the solution set (rational kinds only)
struct VarRange {
  Rational lo, hi;
  RVec at_lo, at_hi;
};
std::optional<VarRange> variable_range(const KernelSystem& sys, std::size_t var);
// variables moved by some direction of the affine solution set; the others are pinned
std::vector<bool> affinely_free(const KernelSystem& sys);

Kernel kernel_from_rationals(const KernelSystem& sys, const RVec& x);

}  // namespace markov
