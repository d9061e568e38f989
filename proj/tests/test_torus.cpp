#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helly/errors.hpp"
#include "helly/torus/weight_system.hpp"
#include "support/test_support.hpp"

using namespace helly;
using exact::Int;
using exact::IntVec;
using helly::testing::Rng;
using torus::WeightSystem;

namespace {

IntVec vec(std::vector<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

WeightSystem system_of(std::size_t rank,
                       std::vector<std::vector<std::vector<long>>> factors) {
  WeightSystem w;
  w.rank = rank;
  for (auto& f : factors) {
    std::vector<IntVec> ws;
    for (auto& v : f) ws.push_back(vec(v));
    w.factors.push_back(std::move(ws));
  }
  return w;
}

WeightSystem random_system(Rng& rng, bool bias_balanced) {
  std::size_t rank = 1 + rng() % 3;
  std::size_t m = 1 + rng() % 6;
  WeightSystem w;
  w.rank = rank;
  w.factors.resize(m);
  for (auto& f : w.factors) {
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      IntVec v(rank);
      for (auto& x : v) x = helly::testing::rand_range(rng, -3, 3);
      f.push_back(v);
      if (bias_balanced && rng() % 2) {
        IntVec neg(rank);
        for (std::size_t j = 0; j < rank; ++j) neg[j] = -v[j];
        w.factors[rng() % m].push_back(std::move(neg));
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("orbit closedness of pinned systems") {
  // the doubled-coordinate instance for n = 2
  auto hard2 = torus::hard_instance(2);
  auto r = torus::orbit_closed(hard2);
  CHECK(r.closed);
  CHECK(torus::orbit_dimension(hard2) == 2);

  auto single = system_of(1, {{{1}}});
  CHECK_FALSE(torus::orbit_closed(single).closed);

  auto fixed = system_of(1, {{{0}}});
  CHECK(torus::orbit_closed(fixed).closed);
  CHECK(torus::orbit_dimension(fixed) == 0);
}

TEST_CASE("orbit dimension") {
  CHECK(torus::orbit_dimension(
            system_of(2, {{{1, 1}}, {{-1, -1}}})) == 1);
  CHECK(torus::orbit_dimension(system_of(2, {})) == 0);
}

TEST_CASE("steinitz subset: pinned exhaustive values") {
  // the minimal balanced triple beats the coordinate square here
  std::vector<IntVec> ws = {vec({1, 0}), vec({-1, 0}), vec({0, 1}),
                            vec({0, -1}), vec({1, 1})};
  auto cert = torus::steinitz_subset(ws);
  CHECK(cert.selected == std::vector<std::size_t>{1, 3, 4});
  CHECK(cert.selected.size() <= 4);

  auto pair = torus::steinitz_subset({vec({1}), vec({-1})});
  CHECK(pair.selected == std::vector<std::size_t>{0, 1});

  auto origin = torus::steinitz_subset({vec({0, 0})});
  CHECK(origin.selected == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(torus::steinitz_subset({vec({1}), vec({2})}), domain_error);
}

TEST_CASE("steinitz certificate recomputes and respects the span") {
  Rng rng(777);
  int done = 0;
  for (int iter = 0; iter < 500 && done < 120; ++iter) {
    WeightSystem w = random_system(rng, true);
    auto weights = w.all_weights();
    if (weights.empty()) continue;
    if (!torus::orbit_closed(w).closed) continue;
    ++done;
    auto cert = torus::steinitz_subset(weights);
    std::size_t full = torus::orbit_dimension(w);
    bool within_bound = cert.selected.size() <= 2 * full || full == 0;
    CHECK(within_bound);
    // combination certificate re-verifies exactly
    exact::Rat sum = 0;
    exact::RatVec acc(w.rank, exact::Rat(0));
    REQUIRE(cert.combination.coefficients.size() == cert.selected.size());
    for (std::size_t i = 0; i < cert.selected.size(); ++i) {
      const exact::Rat& l = cert.combination.coefficients[i];
      CHECK(l > 0);
      sum += l;
      for (std::size_t j = 0; j < w.rank; ++j)
        acc[j] += l * exact::Rat(weights[cert.selected[i]][j]);
    }
    CHECK(sum == 1);
    for (const auto& v : acc) CHECK(v == 0);
  }
  CHECK(done >= 100);
}

TEST_CASE("select_factors on pinned systems") {
  // four factors carrying +-e1, +-e2 one weight each: all four needed
  auto rep = torus::select_factors(torus::hard_instance(2));
  CHECK(rep.indices == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(rep.closed);
  CHECK(rep.dim_selected == rep.dim_full);

  // a single already-closed factor selects itself
  auto one = torus::select_factors(system_of(1, {{{1}, {-1}}}));
  CHECK(one.indices == std::vector<std::size_t>{0});

  // duplicated weights across six factors: two factors suffice
  auto six = torus::select_factors(system_of(
      1, {{{1}}, {{-1}}, {{1}}, {{-1}}, {{0}}, {{0}}}));
  CHECK(six.indices.size() == 2);
  CHECK(six.indices[0] < 4);
  CHECK(six.indices[1] < 4);

  CHECK_THROWS_AS(torus::select_factors(system_of(1, {{{1}}})), domain_error);
}

TEST_CASE("orbit_closed agrees with the direction-grid oracle (rank <= 2)") {
  Rng rng(2024);
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t rank = 1 + rng() % 2;
    std::size_t m = 1 + rng() % 4;
    WeightSystem w;
    w.rank = rank;
    w.factors.resize(m);
    std::vector<IntVec> all;
    for (auto& f : w.factors) {
      std::size_t k = 1 + rng() % 2;
      for (std::size_t i = 0; i < k; ++i) {
        IntVec v(rank);
        for (auto& x : v) x = helly::testing::rand_range(rng, -2, 2);
        all.push_back(v);
        f.push_back(std::move(v));
      }
    }
    bool got = torus::orbit_closed(w).closed;
    bool expect = helly::testing::relint_contains_zero_grid(all, 2);
    CHECK(got == expect);
  }
}

TEST_CASE("hard instances: construction and strict minimality") {
  for (std::size_t n = 1; n <= 3; ++n) {
    WeightSystem w = torus::hard_instance(n);
    REQUIRE(w.factors.size() == 2 * n);
    CHECK(torus::orbit_closed(w).closed);
    CHECK(torus::orbit_dimension(w) == n);
    // every proper factor subset loses closedness or dimension
    for (std::size_t mask = 0; mask + 1 < (1u << (2 * n)); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < 2 * n; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      if (idx.empty()) continue;
      WeightSystem sub = w.project(idx);
      bool ok = torus::orbit_closed(sub).closed &&
                torus::orbit_dimension(sub) == n;
      CHECK_FALSE(ok);
    }
  }
}

TEST_CASE("selection is superset-monotone") {
  Rng rng(909);
  int done = 0;
  for (int iter = 0; iter < 400 && done < 60; ++iter) {
    WeightSystem w = random_system(rng, true);
    if (w.factors.size() > 6) continue;
    if (!torus::orbit_closed(w).closed) continue;
    ++done;
    auto rep = torus::select_factors(w);
    // every superset of the selection stays closed with equal dimension
    std::size_t m = w.factors.size();
    for (std::size_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<std::size_t> idx;
      bool super = true;
      for (std::size_t i : rep.indices)
        if (!(mask & (1u << i))) super = false;
      if (!super) continue;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      WeightSystem sub = w.project(idx);
      CHECK(torus::orbit_closed(sub).closed);
      CHECK(torus::orbit_dimension(sub) == rep.dim_full);
    }
  }
  CHECK(done >= 40);
}
