#pragma once
#include <vector>

#include "helly/rank2/gl2.hpp"

namespace helly::rank2 {

// One-parameter subgroup up to conjugacy: positive eigenline plus slope r/n.
struct OnePSSpec {
  ProjectiveRoot eigenline;
  Rat slope;
};

// Closedness verdict with the destabilizing subgroup when there is one:
// either an eigenline with a slope whose limit escapes the orbit, or the
// scaling subgroup (scalar_direction +-1) for one-sided weight tuples.
struct OracleVerdict {
  bool closed = false;
  std::optional<OnePSSpec> escape;
  int scalar_direction = 0;
};

// Definitional closedness via limits: enumerate candidate eigenlines and the
// finitely many slope regimes, compute each exact limit from the monomial
// exponents, and decide limit membership by root correspondence plus the
// coefficient character system (solvability via the kernel lattice).
// Works from expanded coefficients, independent of the structured criteria.
OracleVerdict oracle_sl2_verdict(const std::vector<FactoredForm>& forms);
OracleVerdict oracle_gl2_verdict(const std::vector<Gl2Component>& comps);

bool oracle_sl2_closed(const std::vector<FactoredForm>& forms);
bool oracle_gl2_closed(const std::vector<Gl2Component>& comps);

}  // namespace helly::rank2
