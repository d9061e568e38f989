#include "helly/actions/coset_action.hpp"

#include "helly/detail/combinatorics.hpp"
#include "helly/errors.hpp"

namespace helly::actions {

using detail::ElemSet;

CosetSpaceAction::CosetSpaceAction(
    FiniteGroupTable group, std::vector<std::vector<std::size_t>> stabilizers)
    : group_(std::move(group)), stabilizers_(std::move(stabilizers)) {
  const std::size_t n = group_.order();
  for (const auto& h : stabilizers_) {
    if (!group_.is_subgroup(h))
      throw domain_error("coset action: stabilizer is not a subgroup");
    ElemSet hs(n);
    for (std::size_t e : h) hs.set(e);
    std::vector<std::size_t> index(n, n), reps;
    for (std::size_t a = 0; a < n; ++a) {
      if (index[a] != n) continue;
      std::size_t id = reps.size();
      for (std::size_t x : detail::left_coset(group_.dense(), a, hs).elements())
        index[x] = id;
      reps.push_back(a);
    }
    coset_reps_.push_back(std::move(reps));
    coset_index_.push_back(std::move(index));
  }
}

std::size_t CosetSpaceAction::act(std::size_t g, std::size_t i,
                                  std::size_t c) const {
  return coset_index_[i][group_.prod(g, coset_reps_[i][c])];
}

namespace {

void check_point(const CosetSpaceAction& a, const ProductPoint& p) {
  if (p.coords.size() != a.factor_count())
    throw domain_error("product point: wrong number of factors");
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] >= a.cosets_in_factor(i))
      throw domain_error("product point: coset index out of range");
}

bool same_orbit_on(const CosetSpaceAction& a, const ProductPoint& x,
                   const ProductPoint& y,
                   const std::vector<std::size_t>& idx) {
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    bool all = true;
    for (std::size_t i : idx)
      if (a.act(g, i, x.coords[i]) != y.coords[i]) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool same_orbit(const CosetSpaceAction& action, const ProductPoint& x,
                const ProductPoint& y) {
  check_point(action, x);
  check_point(action, y);
  std::vector<std::size_t> all(action.factor_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return same_orbit_on(action, x, y, all);
}

std::vector<std::size_t> min_separating_projection(
    const CosetSpaceAction& action, const ProductPoint& x,
    const ProductPoint& y) {
  if (same_orbit(action, x, y))
    throw domain_error("min_separating_projection: points share an orbit");
  const std::size_t m = action.factor_count();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> pick = detail::first_combination(size);
    do {
      if (!same_orbit_on(action, x, y, pick)) return pick;
    } while (detail::next_combination(pick, m));
  }
  throw domain_error("min_separating_projection: unreachable");
}

OrbitWitness helly_to_orbit_witness(
    const FiniteGroupTable& group,
    const std::vector<std::vector<std::size_t>>& subgroups,
    const std::vector<std::size_t>& representatives) {
  if (subgroups.size() != representatives.size() || subgroups.empty())
    throw domain_error("helly_to_orbit_witness: malformed system");
  const std::size_t m = subgroups.size();

  // validate criticality of the coset system a_i H_i
  std::vector<ElemSet> cosets;
  for (std::size_t i = 0; i < m; ++i) {
    if (!group.is_subgroup(subgroups[i]))
      throw domain_error("helly_to_orbit_witness: not a subgroup");
    ElemSet h(group.order());
    for (std::size_t e : subgroups[i]) h.set(e);
    cosets.push_back(detail::left_coset(group.dense(), representatives[i], h));
  }
  auto inter_all_but = [&](std::size_t skip) {
    ElemSet acc(group.order());
    bool first = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == skip) continue;
      if (first) {
        acc = cosets[i];
        first = false;
      } else {
        acc &= cosets[i];
      }
    }
    return acc;
  };
  ElemSet total = inter_all_but(m);  // skip index out of range: intersect all
  if (total.any())
    throw domain_error("helly_to_orbit_witness: intersection nonempty");
  for (std::size_t i = 0; i < m; ++i)
    if (!inter_all_but(i).any())
      throw domain_error("helly_to_orbit_witness: a proper subsystem is empty");

  CosetSpaceAction action(group, subgroups);
  ProductPoint x, y;
  for (std::size_t i = 0; i < m; ++i) {
    x.coords.push_back(action.coset_of(i, group.identity()));
    y.coords.push_back(action.coset_of(i, representatives[i]));
  }
  return {std::move(action), std::move(x), std::move(y)};
}

}  // namespace helly::actions
