#include "helly/rank2/sl2.hpp"

#include "helly/detail/combinatorics.hpp"
#include "helly/errors.hpp"

namespace helly::rank2 {

namespace {

void check_tuple(const std::vector<FactoredForm>& forms) {
  if (forms.empty()) throw domain_error("sl2: empty tuple");
  for (const auto& f : forms)
    if (f.degree() == 0) throw domain_error("sl2: degree-zero component");
}

// Every component equal to c_i (L1 L2)^{e_i} for one pair of distinct lines.
bool two_line_power_tuple(const std::vector<FactoredForm>& forms) {
  std::vector<ProjectiveRoot> lines = distinct_roots(forms);
  if (lines.size() != 2) return false;
  for (const auto& f : forms) {
    std::size_t a = multiplicity(f, lines[0]);
    std::size_t b = multiplicity(f, lines[1]);
    if (a != b || a + b != f.degree()) return false;
  }
  return true;
}

}  // namespace

bool sl2_orbit_closed(const std::vector<FactoredForm>& forms) {
  check_tuple(forms);
  if (common_high_root(forms).empty()) return true;  // no 1-PS limit exists
  return two_line_power_tuple(forms);
}

std::size_t sl2_stabilizer_dimension(const std::vector<FactoredForm>& forms) {
  check_tuple(forms);
  std::vector<ProjectiveRoot> lines = distinct_roots(forms);
  if (lines.size() >= 3) return 0;
  if (lines.size() == 1) return 1;  // unipotent fixing the line
  // two lines: the torus survives iff multiplicities balance componentwise
  for (const auto& f : forms)
    if (multiplicity(f, lines[0]) != multiplicity(f, lines[1])) return 0;
  return 1;
}

std::size_t sl2_orbit_dimension(const std::vector<FactoredForm>& forms) {
  return 3 - sl2_stabilizer_dimension(forms);
}

SelectionReport sl2_select(const std::vector<FactoredForm>& forms) {
  if (!sl2_orbit_closed(forms))
    throw domain_error("sl2_select: orbit not closed");
  SelectionReport rep;
  rep.dim_full = sl2_orbit_dimension(forms);
  for (std::size_t size = 1; size <= forms.size() && size <= 3; ++size) {
    std::vector<std::size_t> pick = detail::first_combination(size);
    do {
      std::vector<FactoredForm> sub;
      sub.reserve(size);
      for (std::size_t i : pick) sub.push_back(forms[i]);
      if (sl2_orbit_closed(sub) && sl2_orbit_dimension(sub) == rep.dim_full) {
        rep.indices = pick;
        rep.closed = true;
        rep.dim_selected = rep.dim_full;
        return rep;
      }
    } while (detail::next_combination(pick, forms.size()));
  }
  throw domain_error("sl2_select: no subset of size <= 3 found");
}

}  // namespace helly::rank2
