#pragma once

#include <cstdint>
#include <optional>

#include "markov/semiring.hpp"
#include "markov/verdict.hpp"

namespace markov {

struct Strategy {
  enum class Mode { Auto, Exhaustive, Sampled, Certified };
  Mode mode = Mode::Auto;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;

  static Strategy exhaustive() { return {Mode::Exhaustive, 0, 0}; }
  static Strategy certified() { return {Mode::Certified, 0, 0}; }
  static Strategy sampled(std::uint64_t seed, std::size_t n = 10000) { return {Mode::Sampled, seed, n}; }
};

std::optional<Value> find_complement(const Value& r);

Verdict check_zerosumfree(const Semiring& R, Strategy st = {});
Verdict check_entire(const Semiring& R, Strategy st = {});
// s(v+w) = t(v+w) => sv = tv and sw = tw, for s, t, v+w with complements
Verdict check_causality_criterion(const Semiring& R, Strategy st = {});
// associativity, commutativity, units, distributivity, annihilation, zero != one
Verdict check_semiring_axioms(const Semiring& R, Strategy st = {});
Verdict validate_lattice(const FiniteLattice& l);

}  // namespace markov
