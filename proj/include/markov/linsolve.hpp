#pragma once

#include <optional>
#include <vector>

#include "markov/rational.hpp"

namespace markov {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

// all solutions of A x = b: particular + span(directions)
struct AffineSolution {
  RVec particular;
  std::vector<RVec> directions;
};
std::optional<AffineSolution> solve_affine(const RMat& A, const RVec& b);

// min c.x subject to A x = b, x >= 0 (exact two-phase simplex, Bland's rule)
struct LpResult {
  enum class Status { Infeasible, Unbounded, Optimal } status = Status::Infeasible;
  Rational value;
  RVec x;
};
LpResult minimize(const RMat& A, const RVec& b, const RVec& c);
std::optional<RVec> nonneg_solution(const RMat& A, const RVec& b);

}  // namespace markov
