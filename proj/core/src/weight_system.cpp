#include "helly/torus/weight_system.hpp"

#include <algorithm>

#include "helly/detail/combinatorics.hpp"
#include "helly/errors.hpp"
#include "helly/exact/snf.hpp"

namespace helly::torus {

using exact::IntMatrix;
using exact::Rat;
using exact::RatVec;

void WeightSystem::validate() const {
  for (const auto& f : factors)
    for (const auto& w : f)
      if (w.size() != rank)
        throw domain_error("weight vector length != torus rank");
}

std::vector<IntVec> WeightSystem::all_weights() const {
  std::vector<IntVec> out;
  for (const auto& f : factors) out.insert(out.end(), f.begin(), f.end());
  return out;
}

WeightSystem WeightSystem::project(
    const std::vector<std::size_t>& indices) const {
  WeightSystem w;
  w.rank = rank;
  for (std::size_t i : indices) {
    if (i >= factors.size()) throw domain_error("factor index out of range");
    w.factors.push_back(factors[i]);
  }
  return w;
}

namespace {

std::vector<RatVec> to_rat_points(const std::vector<IntVec>& weights) {
  std::vector<RatVec> pts;
  pts.reserve(weights.size());
  for (const auto& w : weights) {
    RatVec p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) p[i] = Rat(w[i]);
    pts.push_back(std::move(p));
  }
  return pts;
}

IntMatrix stack(const std::vector<IntVec>& weights, std::size_t rank) {
  IntMatrix m(weights.size(), rank);
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = 0; j < rank; ++j) m.at(i, j) = weights[i][j];
  return m;
}

std::size_t span_rank(const std::vector<IntVec>& weights, std::size_t rank) {
  if (weights.empty()) return 0;
  return exact::integer_rank(stack(weights, rank));
}

bool subset_valid(const std::vector<IntVec>& weights,
                  const std::vector<std::size_t>& pick, std::size_t rank,
                  std::size_t full_rank,
                  exact::StrictCombination* cert = nullptr) {
  std::vector<IntVec> sub;
  sub.reserve(pick.size());
  for (std::size_t i : pick) sub.push_back(weights[i]);
  if (span_rank(sub, rank) != full_rank) return false;
  auto comb = exact::strict_zero_combination(to_rat_points(sub));
  if (!comb) return false;
  if (cert) *cert = std::move(*comb);
  return true;
}

}  // namespace

ClosednessResult orbit_closed(const WeightSystem& w) {
  w.validate();
  std::vector<IntVec> weights = w.all_weights();
  if (weights.empty()) return {true, exact::StrictCombination{}};  // zero point
  auto comb = exact::strict_zero_combination(to_rat_points(weights));
  if (!comb) return {false, std::nullopt};
  return {true, std::move(comb)};
}

std::size_t orbit_dimension(const WeightSystem& w) {
  w.validate();
  return span_rank(w.all_weights(), w.rank);
}

SteinitzCertificate steinitz_subset(const std::vector<IntVec>& weights) {
  if (weights.empty())
    throw domain_error("steinitz_subset: empty weight multiset");
  const std::size_t rank = weights[0].size();
  const std::size_t full_rank = span_rank(weights, rank);
  if (!exact::strict_zero_combination(to_rat_points(weights)))
    throw domain_error("steinitz_subset: 0 not interior to the support");

  // greedy removal pass
  std::vector<std::size_t> pool(weights.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  for (std::size_t i = 0; i < pool.size();) {
    std::vector<std::size_t> trial = pool;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (!trial.empty() && subset_valid(weights, trial, rank, full_rank))
      pool = std::move(trial);
    else
      ++i;
  }

  // exhaustive by size over the reduced pool; the 2*rank bound is a theorem,
  // so this terminates early
  for (std::size_t size = 1; size <= pool.size(); ++size) {
    std::vector<std::size_t> comb = detail::first_combination(size);
    do {
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = pool[comb[i]];
      SteinitzCertificate cert;
      if (subset_valid(weights, pick, rank, full_rank, &cert.combination)) {
        cert.selected = std::move(pick);
        // 2*rank, except that the zero span still needs the zero weight
        std::size_t bound = full_rank ? 2 * full_rank : 1;
        if (cert.selected.size() > bound)
          throw domain_error("steinitz_subset: bound exceeded");
        return cert;
      }
    } while (detail::next_combination(comb, pool.size()));
  }
  throw domain_error("steinitz_subset: no valid subset found");
}

SelectionReport select_factors(const WeightSystem& w) {
  w.validate();
  ClosednessResult full = orbit_closed(w);
  if (!full.closed) throw domain_error("select_factors: orbit not closed");

  SelectionReport rep;
  rep.dim_full = orbit_dimension(w);

  std::vector<IntVec> weights = w.all_weights();
  if (weights.empty()) {
    // the zero point: any single factor (there may be none) keeps everything
    if (!w.factors.empty()) rep.indices.push_back(0);
    rep.closed = true;
    rep.dim_selected = 0;
    return rep;
  }
  rep.steinitz = steinitz_subset(weights);

  // cover each selected weight by its first containing factor
  std::vector<std::size_t> owner(weights.size());
  {
    std::size_t at = 0;
    for (std::size_t f = 0; f < w.factors.size(); ++f)
      for (std::size_t k = 0; k < w.factors[f].size(); ++k) owner[at++] = f;
  }
  for (std::size_t widx : rep.steinitz.selected) {
    const IntVec& target = weights[widx];
    std::size_t chosen = owner[widx];
    for (std::size_t f = 0; f < w.factors.size(); ++f) {
      bool has = std::find(w.factors[f].begin(), w.factors[f].end(), target) !=
                 w.factors[f].end();
      if (has) {
        chosen = f;
        break;
      }
    }
    rep.indices.push_back(chosen);
  }
  std::sort(rep.indices.begin(), rep.indices.end());
  rep.indices.erase(std::unique(rep.indices.begin(), rep.indices.end()),
                    rep.indices.end());

  WeightSystem sel = w.project(rep.indices);
  rep.closed = orbit_closed(sel).closed;
  rep.dim_selected = orbit_dimension(sel);
  if (!rep.closed || rep.dim_selected != rep.dim_full)
    throw domain_error("select_factors: selection lost closedness or rank");
  return rep;
}

WeightSystem hard_instance(std::size_t n) {
  if (n < 1) throw domain_error("hard_instance: n must be >= 1");
  WeightSystem w;
  w.rank = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec plus(n, Int(0)), minus(n, Int(0));
    plus[i] = 1;
    minus[i] = -1;
    w.factors.push_back({plus});
    w.factors.push_back({minus});
  }
  return w;
}

}  // namespace helly::torus
