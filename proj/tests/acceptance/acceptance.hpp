#pragma once
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helly/torus/weight_system.hpp"

namespace acceptance {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::ostream&)> run;
};

std::vector<Criterion> abelian_criteria();
std::vector<Criterion> torus_criteria();
std::vector<Criterion> rank2_criteria();
std::vector<Criterion> actions_criteria();

// Selections recorded by earlier criteria for the monotonicity check.
struct SharedState {
  std::vector<std::pair<helly::torus::WeightSystem,
                        helly::torus::SelectionReport>>
      torus_selections;
};
SharedState& shared_state();

}  // namespace acceptance
