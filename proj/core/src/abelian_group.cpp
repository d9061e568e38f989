#include "helly/abelian/group.hpp"

#include <algorithm>

#include "helly/detail/combinatorics.hpp"
#include "helly/detail/dense_group.hpp"
#include "helly/errors.hpp"
#include "helly/exact/linear.hpp"

namespace helly::abelian {

using exact::IntMatrix;

FiniteAbelianGroup::FiniteAbelianGroup(IntVec invariant_factors) {
  for (const Int& f : invariant_factors)
    if (f < 1) throw domain_error("invariant factor < 1");
  for (std::size_t i = 0; i + 1 < invariant_factors.size(); ++i)
    if (invariant_factors[i + 1] % invariant_factors[i] != 0)
      throw domain_error("invariant factors must form a divisibility chain");
  for (Int& f : invariant_factors)
    if (f != 1) factors_.push_back(std::move(f));
}

Int FiniteAbelianGroup::order() const {
  Int n = 1;
  for (const Int& f : factors_) n *= f;
  return n;
}

IntVec FiniteAbelianGroup::reduce(IntVec element) const {
  if (element.size() != factors_.size())
    throw domain_error("element length != number of invariant factors");
  for (std::size_t i = 0; i < element.size(); ++i)
    element[i] = exact::mod_floor(element[i], factors_[i]);
  return element;
}

std::size_t min_generators(const FiniteAbelianGroup& g) { return g.rank(); }

std::size_t kappa_abelian(const FiniteAbelianGroup& g) {
  if (g.is_trivial())
    throw domain_error("kappa_abelian: trivial group (kappa is 0 vacuously)");
  return min_generators(g) + 1;
}

Subgroup::Subgroup(FiniteAbelianGroup ambient, std::vector<IntVec> generators)
    : ambient_(std::move(ambient)) {
  gens_.reserve(generators.size());
  for (IntVec& v : generators) gens_.push_back(ambient_.reduce(std::move(v)));
}

namespace {

// Columns: subgroup generators followed by diag(invariant factors).
IntMatrix lattice_matrix(const Subgroup& s) {
  const auto& factors = s.ambient().invariant_factors();
  const std::size_t k = factors.size(), m = s.generators().size();
  IntMatrix a(k, m + k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) a.at(i, j) = s.generators()[j][i];
  for (std::size_t i = 0; i < k; ++i) a.at(i, m + i) = factors[i];
  return a;
}

IntVec sub_vec(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

bool Subgroup::contains(const IntVec& element) const {
  IntVec e = ambient_.reduce(element);
  return exact::solve_integer_linear(lattice_matrix(*this), e).has_value();
}

bool Subgroup::same_subgroup(const Subgroup& other) const {
  if (!(ambient_ == other.ambient_)) return false;
  for (const IntVec& g : gens_)
    if (!other.contains(g)) return false;
  for (const IntVec& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Coset::contains(const IntVec& element) const {
  return subgroup.contains(
      sub_vec(subgroup.ambient().reduce(element), representative));
}

bool Coset::same_coset(const Coset& other) const {
  return subgroup.same_subgroup(other.subgroup) &&
         contains(other.representative);
}

namespace {

// Intersection of two cosets in one ambient group, or nullopt.
std::optional<Coset> intersect_pair(const Coset& c1, const Coset& c2) {
  const FiniteAbelianGroup& amb = c1.subgroup.ambient();
  const auto& factors = amb.invariant_factors();
  const std::size_t k = factors.size();
  const auto& g1 = c1.subgroup.generators();
  const auto& g2 = c2.subgroup.generators();
  const std::size_t m1 = g1.size(), m2 = g2.size();

  // r1 + G1 a = r2 + G2 b  (mod factors)
  IntMatrix a(k, m1 + m2 + k);
  for (std::size_t j = 0; j < m1; ++j)
    for (std::size_t i = 0; i < k; ++i) a.at(i, j) = g1[j][i];
  for (std::size_t j = 0; j < m2; ++j)
    for (std::size_t i = 0; i < k; ++i) a.at(i, m1 + j) = -g2[j][i];
  for (std::size_t i = 0; i < k; ++i) a.at(i, m1 + m2 + i) = factors[i];
  IntVec rhs = sub_vec(c2.representative, c1.representative);

  auto sol = exact::solve_integer_linear(a, rhs);
  if (!sol) return std::nullopt;

  IntVec rep(k, Int(0));
  for (std::size_t i = 0; i < k; ++i) {
    Int acc = c1.representative[i];
    for (std::size_t j = 0; j < m1; ++j) acc += g1[j][i] * sol->particular[j];
    rep[i] = acc;
  }
  rep = amb.reduce(std::move(rep));

  // kernel vectors, restricted to the G1 block, generate the intersection
  std::vector<IntVec> gens;
  for (const IntVec& v : sol->kernel) {
    IntVec w(k, Int(0));
    bool zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < m1; ++j) w[i] += g1[j][i] * v[j];
      w[i] = exact::mod_floor(w[i], factors[i]);
      if (w[i] != 0) zero = false;
    }
    if (!zero) gens.push_back(std::move(w));
  }
  return Coset{std::move(rep), Subgroup(amb, std::move(gens))};
}

}  // namespace

std::optional<Coset> intersect_cosets(const std::vector<Coset>& cosets) {
  if (cosets.empty()) throw domain_error("intersect_cosets: empty system");
  for (const Coset& c : cosets)
    if (!(c.subgroup.ambient() == cosets[0].subgroup.ambient()))
      throw domain_error("intersect_cosets: mixed ambient groups");
  std::optional<Coset> acc = cosets[0];
  for (std::size_t i = 1; i < cosets.size(); ++i) {
    acc = intersect_pair(*acc, cosets[i]);
    if (!acc) return std::nullopt;
  }
  return acc;
}

std::vector<std::size_t> helly_certificate(const std::vector<Coset>& cosets,
                                           std::size_t max_subset) {
  if (intersect_cosets(cosets))
    throw domain_error("helly_certificate: system has nonempty intersection");
  const std::size_t m = cosets.size();
  const std::size_t limit = max_subset == 0 ? m : std::min(max_subset, m);
  for (std::size_t size = 1; size <= limit; ++size) {
    std::vector<std::size_t> pick = detail::first_combination(size);
    do {
      std::vector<Coset> sub;
      sub.reserve(size);
      for (std::size_t i : pick) sub.push_back(cosets[i]);
      if (!intersect_cosets(sub)) return pick;
    } while (detail::next_combination(pick, m));
  }
  throw resource_error("helly_certificate: subset size cap exceeded");
}

std::vector<Coset> witness_system(const Int& p, std::size_t d) {
  if (!exact::is_prime(p)) throw domain_error("witness_system: p not prime");
  if (d < 1) throw domain_error("witness_system: d must be >= 1");
  FiniteAbelianGroup g(IntVec(d, p));
  std::vector<Coset> out;
  for (std::size_t i = 0; i < d; ++i) {
    // x_i = 0: generated by the other coordinate vectors
    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      IntVec e(d, Int(0));
      e[j] = 1;
      gens.push_back(std::move(e));
    }
    out.push_back(Coset{IntVec(d, Int(0)), Subgroup(g, std::move(gens))});
  }
  // sum x_i = 1: representative e_1, subgroup {sum = 0}
  std::vector<IntVec> gens;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    IntVec e(d, Int(0));
    e[j] = 1;
    e[j + 1] = p - 1;
    gens.push_back(std::move(e));
  }
  IntVec rep(d, Int(0));
  rep[0] = 1;
  out.push_back(Coset{std::move(rep), Subgroup(g, std::move(gens))});

  // construction sanity: total empty, every d-subset nonempty
  if (intersect_cosets(out))
    throw domain_error("witness_system: total intersection nonempty");
  for (std::size_t skip = 0; skip < out.size(); ++skip) {
    std::vector<Coset> sub;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (i != skip) sub.push_back(out[i]);
    if (!intersect_cosets(sub))
      throw domain_error("witness_system: a d-subset is empty");
  }
  return out;
}

BruteKappaResult brute_kappa_detail(const FiniteAbelianGroup& g,
                                    std::size_t max_order) {
  Int order = g.order();
  if (order > static_cast<long>(max_order))
    throw resource_error("brute_kappa: group order exceeds bound");
  std::vector<long> factors;
  for (const Int& f : g.invariant_factors())
    factors.push_back(static_cast<long>(f.get_si()));
  detail::DenseGroup dg = detail::DenseGroup::from_abelian(factors);
  detail::CriticalSearchResult r = detail::longest_critical_system(dg);
  BruteKappaResult out;
  out.kappa = r.kappa;
  for (const auto& s : r.witness_subgroups)
    out.witness_subgroups.push_back(s.elements());
  out.witness_reps = r.witness_reps;
  return out;
}

std::size_t brute_kappa(const FiniteAbelianGroup& g, std::size_t max_order) {
  return brute_kappa_detail(g, max_order).kappa;
}

IntVec element_from_index(const FiniteAbelianGroup& g, std::size_t index) {
  IntVec v(g.rank());
  for (std::size_t c = 0; c < g.rank(); ++c) {
    unsigned long f = g.invariant_factors()[c].get_ui();
    v[c] = static_cast<long>(index % f);
    index /= f;
  }
  return v;
}

std::size_t index_of_element(const FiniteAbelianGroup& g, const IntVec& v) {
  IntVec r = g.reduce(v);
  std::size_t idx = 0;
  for (std::size_t c = g.rank(); c-- > 0;) {
    unsigned long f = g.invariant_factors()[c].get_ui();
    idx = idx * f + r[c].get_ui();
  }
  return idx;
}

}  // namespace helly::abelian
