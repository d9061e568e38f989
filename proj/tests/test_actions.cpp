#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helly/abelian/group.hpp"
#include "helly/actions/coset_action.hpp"
#include "helly/errors.hpp"

using namespace helly;
using actions::CosetSpaceAction;
using actions::FiniteGroupTable;
using actions::ProductPoint;

namespace {

FiniteGroupTable klein() {
  return actions::direct_product(actions::cyclic_group(2),
                                 actions::cyclic_group(2));
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {0, 1}}), domain_error);
  FiniteGroupTable c3 = actions::cyclic_group(3);
  CHECK(c3.order() == 3);
  CHECK(c3.identity() == 0);
  CHECK(c3.prod(1, 2) == 0);
}

TEST_CASE("builders produce valid groups of the right order") {
  CHECK(actions::dihedral_group(4).order() == 8);
  CHECK(actions::quaternion_group().order() == 8);
  CHECK(actions::dicyclic_group_12().order() == 12);
  CHECK(actions::symmetric_group(3).order() == 6);
  CHECK(actions::symmetric_group(4).order() == 24);
  CHECK(actions::alternating_group_4().order() == 12);
  CHECK(klein().order() == 4);
}

TEST_CASE("brute kappa on tables") {
  CHECK(actions::brute_kappa_table(actions::cyclic_group(5)) == 2);
  CHECK(actions::brute_kappa_table(klein()) == 3);
  CHECK(actions::brute_kappa_table(actions::cyclic_group(1)) == 0);
  CHECK_THROWS_AS(actions::brute_kappa_table(actions::cyclic_group(50)),
                  resource_error);
}

TEST_CASE("brute kappa on abelian tables matches the formula") {
  using abelian::FiniteAbelianGroup;
  auto check_pair = [](const FiniteGroupTable& t, std::vector<long> factors) {
    exact::IntVec f;
    for (long v : factors) f.emplace_back(v);
    CHECK(actions::brute_kappa_table(t) ==
          abelian::kappa_abelian(FiniteAbelianGroup(std::move(f))));
  };
  check_pair(actions::cyclic_group(12), {12});
  check_pair(klein(), {2, 2});
  check_pair(actions::direct_product(actions::cyclic_group(2),
                                     actions::cyclic_group(8)),
             {2, 8});
  check_pair(actions::direct_product(
                 actions::cyclic_group(3),
                 actions::direct_product(actions::cyclic_group(2),
                                         actions::cyclic_group(2))),
             {2, 6});
}

TEST_CASE("same_orbit basics") {
  FiniteGroupTable g = actions::cyclic_group(4);
  // regular action: one factor with trivial stabilizer
  CosetSpaceAction reg(g, {{0}});
  ProductPoint x{{0}}, y{{2}};
  CHECK(actions::same_orbit(reg, x, x));
  CHECK(actions::same_orbit(reg, x, y));

  // two index-two factors that need both coordinates to separate; single
  // factors are homogeneous, so no separating subset of size one exists
  CosetSpaceAction two(g, {{0, 2}, {0, 2}});
  ProductPoint a{{0, 0}};
  ProductPoint b{{1, 0}};
  CHECK_FALSE(actions::same_orbit(two, a, b));
  CHECK(actions::min_separating_projection(two, a, b) ==
        std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(actions::min_separating_projection(two, a, a), domain_error);
}

TEST_CASE("helly witness becomes an orbit separation witness") {
  // the Klein four-group system from the hyperplane construction
  auto r = abelian::brute_kappa_detail(
      abelian::FiniteAbelianGroup(exact::IntVec{2, 2}));
  REQUIRE(r.kappa == 3);
  FiniteGroupTable g = klein();
  auto witness =
      actions::helly_to_orbit_witness(g, r.witness_subgroups, r.witness_reps);
  CHECK_FALSE(actions::same_orbit(witness.action, witness.x, witness.y));
  CHECK(actions::min_separating_projection(witness.action, witness.x,
                                           witness.y)
            .size() == 3);

  // two disjoint singletons in Z/2
  FiniteGroupTable c2 = actions::cyclic_group(2);
  auto w2 = actions::helly_to_orbit_witness(c2, {{0}, {0}}, {0, 1});
  CHECK(actions::min_separating_projection(w2.action, w2.x, w2.y).size() == 2);

  CHECK_THROWS_AS(
      actions::helly_to_orbit_witness(c2, {{0}, {0}}, {0, 0}),
      domain_error);
}

TEST_CASE("extension bound on a nonabelian example") {
  FiniteGroupTable s3 = actions::symmetric_group(3);
  std::size_t k = actions::brute_kappa_table(s3);
  for (const auto& h : s3.normal_subgroups()) {
    if (h.size() == 1 || h.size() == s3.order()) continue;
    std::size_t kh = actions::brute_kappa_table(s3.subgroup_group(h));
    std::size_t kq = actions::brute_kappa_table(s3.quotient_group(h));
    CHECK(k <= kh * kq);
  }
}

TEST_CASE("quotients and subgroup groups are consistent") {
  FiniteGroupTable d4 = actions::dihedral_group(4);
  auto normals = d4.normal_subgroups();
  CHECK(normals.size() >= 3);
  for (const auto& n : normals) {
    FiniteGroupTable q = d4.quotient_group(n);
    CHECK(q.order() * n.size() == d4.order());
  }
}
