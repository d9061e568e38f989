#include <random>

#include "acceptance.hpp"
#include "helly/rank2/oracle.hpp"

namespace acceptance {

namespace {

using helly::exact::Rat;
using helly::rank2::FactoredForm;
using helly::rank2::form_of;
using helly::rank2::Gl2Component;
using helly::rank2::ProjectiveRoot;

const auto X = std::pair<long, long>{1, 0};
const auto Y = std::pair<long, long>{0, 1};
const auto XpY = std::pair<long, long>{1, 1};

std::vector<FactoredForm> sl2_triple() {
  return {form_of(1, {{X, 1}, {Y, 1}}), form_of(1, {{X, 1}, {XpY, 1}}),
          form_of(1, {{Y, 1}, {XpY, 1}})};
}

std::vector<Gl2Component> gl2_five() {
  return {Gl2Component::make(form_of(1, {}), 1),
          Gl2Component::make(form_of(1, {}), -1),
          Gl2Component::make(form_of(1, {{X, 1}, {Y, 1}}), 1),
          Gl2Component::make(form_of(1, {{X, 1}, {XpY, 1}}), 1),
          Gl2Component::make(form_of(1, {{Y, 1}, {XpY, 1}}), 1)};
}

bool criterion6(std::ostream& detail) {
  auto triple = sl2_triple();
  if (!helly::rank2::sl2_orbit_closed(triple)) {
    detail << "triple not closed";
    return false;
  }
  if (helly::rank2::sl2_orbit_dimension(triple) != 3) {
    detail << "dimension != 3";
    return false;
  }
  for (std::size_t skip = 0; skip < 3; ++skip) {
    std::vector<FactoredForm> pair;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != skip) pair.push_back(triple[i]);
    if (helly::rank2::sl2_orbit_closed(pair) &&
        helly::rank2::sl2_orbit_dimension(pair) == 3) {
      detail << "a two-component subset survives";
      return false;
    }
  }
  auto rep = helly::rank2::sl2_select(triple);
  if (rep.indices != std::vector<std::size_t>{0, 1, 2}) {
    detail << "selection is not all three components";
    return false;
  }
  detail << "closed, dim 3, all pairs fail, selection {0,1,2}";
  return true;
}

bool criterion7(std::ostream& detail) {
  auto five = gl2_five();
  if (!helly::rank2::gl2_orbit_closed(five)) {
    detail << "five-tuple not closed";
    return false;
  }
  std::size_t dim = helly::rank2::gl2_orbit_dimension(five);
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::vector<Gl2Component> sub;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != skip) sub.push_back(five[i]);
    if (helly::rank2::gl2_orbit_closed(sub) &&
        helly::rank2::gl2_orbit_dimension(sub) == dim) {
      detail << "a four-component subset survives";
      return false;
    }
  }
  auto rep = helly::rank2::gl2_select(five);
  if (rep.indices != std::vector<std::size_t>{0, 1, 2, 3, 4}) {
    detail << "selection is not all five components";
    return false;
  }
  detail << "closed, dim " << dim << ", all 4-subsets fail, selection full";
  return true;
}

ProjectiveRoot random_root(std::mt19937_64& rng) {
  static const std::vector<std::pair<long, long>> pool = {
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {1, -2}};
  auto [p, q] = pool[rng() % pool.size()];
  return ProjectiveRoot::make(p, q);
}

FactoredForm random_form(std::mt19937_64& rng, std::size_t degree) {
  static const std::vector<Rat> coeffs = {Rat(1),  Rat(-1),   Rat(2),
                                          Rat(-2), Rat(1, 2), Rat(3, 2)};
  std::vector<std::pair<ProjectiveRoot, std::size_t>> roots;
  std::size_t left = degree;
  while (left > 0) {
    std::size_t m = 1 + rng() % left;
    roots.emplace_back(random_root(rng), m);
    left -= m;
  }
  return FactoredForm::make(coeffs[rng() % coeffs.size()], std::move(roots));
}

bool criterion8(std::ostream& detail) {
  std::mt19937_64 rng(0x0AC1E);
  std::size_t closed_sl2 = 0, closed_gl2 = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t count = 1 + rng() % 5;
    std::vector<FactoredForm> forms;
    for (std::size_t i = 0; i < count; ++i)
      forms.push_back(random_form(rng, 1 + rng() % 4));
    bool structured = helly::rank2::sl2_orbit_closed(forms);
    if (structured != helly::rank2::oracle_sl2_closed(forms)) {
      detail << "sl2 mismatch at iter " << iter;
      return false;
    }
    closed_sl2 += structured;
  }
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t count = 1 + rng() % 5;
    std::vector<Gl2Component> comps;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t d = rng() % 5;
      long e = static_cast<long>(rng() % 5) - 2;
      if (d == 0 && e == 0) e = (rng() % 2) ? 1 : -1;
      comps.push_back(Gl2Component::make(random_form(rng, d), e));
    }
    bool structured = helly::rank2::gl2_orbit_closed(comps);
    if (structured != helly::rank2::oracle_gl2_closed(comps)) {
      detail << "gl2 mismatch at iter " << iter;
      return false;
    }
    closed_gl2 += structured;
  }
  detail << "10^4 each; closed: " << closed_sl2 << " sl2, " << closed_gl2
         << " gl2";
  return true;
}

}  // namespace

std::vector<Criterion> rank2_criteria() {
  return {
      {6, "the three-quadratic witness realizes delta(SL2) = 3", criterion6},
      {7, "the five-component witness realizes delta(GL2) = 5", criterion7},
      {8, "structured closedness matches the limit oracle on 2x10^4 tuples",
       criterion8},
  };
}

}  // namespace acceptance
