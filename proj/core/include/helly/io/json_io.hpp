#pragma once
#include <string>
#include <vector>

#include "helly/abelian/group.hpp"
#include "helly/abelian/progression.hpp"
#include "helly/rank2/gl2.hpp"
#include "helly/torus/weight_system.hpp"

namespace helly::io {

// Parsing throws helly::parse_error on malformed input; values are validated
// against the owning type's invariants (domain_error on violation).

struct CosetSystem {
  abelian::FiniteAbelianGroup group;
  std::vector<abelian::Coset> cosets;
};
CosetSystem parse_coset_system(const std::string& text);
std::string render_coset_system(const CosetSystem& system);
std::string render_coset(const abelian::Coset& coset);

std::vector<abelian::ArithmeticProgression> parse_progressions(
    const std::string& text);

torus::WeightSystem parse_weight_system(const std::string& text);

// A tuple component as it appears on the wire; zero coefficients and trivial
// modules are legal here and stripped before analysis.
struct RawComponent {
  exact::Rat coeff;
  std::vector<std::pair<rank2::ProjectiveRoot, std::size_t>> roots;
  long det_twist = 0;
  bool has_twist = false;
};
std::vector<RawComponent> parse_components(const std::string& text);

struct StrippedSl2 {
  std::vector<rank2::FactoredForm> forms;
  std::vector<std::size_t> kept, stripped;  // original indices
};
StrippedSl2 to_sl2_tuple(const std::vector<RawComponent>& raw);

struct StrippedGl2 {
  std::vector<rank2::Gl2Component> components;
  std::vector<std::size_t> kept, stripped;
};
StrippedGl2 to_gl2_tuple(const std::vector<RawComponent>& raw);

struct ActionInput {
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::vector<std::size_t>> stabilizers;
  std::vector<std::size_t> x, y;
};
ActionInput parse_action(const std::string& text);

}  // namespace helly::io
