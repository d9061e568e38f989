#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "helly/exact/numbers.hpp"

namespace helly::abelian {

using exact::Int;
using exact::IntVec;

// Finite abelian group given by its invariant factors n1 | n2 | ... (each > 1
// after normalization; factors equal to 1 are dropped on construction).
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(IntVec invariant_factors);

  const IntVec& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Int order() const;
  bool is_trivial() const { return factors_.empty(); }

  // Componentwise reduction mod the invariant factors.
  IntVec reduce(IntVec element) const;

  friend bool operator==(const FiniteAbelianGroup&,
                         const FiniteAbelianGroup&) = default;

 private:
  IntVec factors_;
};

// Minimal number of generators: the count of invariant factors > 1.
std::size_t min_generators(const FiniteAbelianGroup& g);

// Helly number of a nontrivial finite abelian group: min_generators + 1.
std::size_t kappa_abelian(const FiniteAbelianGroup& g);

class Subgroup {
 public:
  Subgroup(FiniteAbelianGroup ambient, std::vector<IntVec> generators);

  const FiniteAbelianGroup& ambient() const { return ambient_; }
  const std::vector<IntVec>& generators() const { return gens_; }

  bool contains(const IntVec& element) const;
  bool same_subgroup(const Subgroup& other) const;

 private:
  FiniteAbelianGroup ambient_;
  std::vector<IntVec> gens_;
};

struct Coset {
  IntVec representative;
  Subgroup subgroup;

  bool contains(const IntVec& element) const;
  bool same_coset(const Coset& other) const;
};

// Exact intersection of cosets sharing an ambient group; nullopt when empty.
std::optional<Coset> intersect_cosets(const std::vector<Coset>& cosets);

// Smallest (then lexicographically first) index subset with empty
// intersection; precondition: the whole system is empty.
std::vector<std::size_t> helly_certificate(const std::vector<Coset>& cosets,
                                           std::size_t max_subset = 0);

// The d+1 cosets in (Z/p)^d whose total intersection is empty while every
// d of them intersect: the coordinate hyperplanes x_i = 0 and {sum x_i = 1}.
std::vector<Coset> witness_system(const Int& p, std::size_t d);

// Definitional Helly number by exhaustive search over the subgroup lattice;
// independent of the invariant-factor formula.
struct BruteKappaResult {
  std::size_t kappa = 0;
  // A longest critical system (empty total intersection, every proper
  // subsystem nonempty), as element-index sets plus a representative.
  std::vector<std::vector<std::size_t>> witness_subgroups;
  std::vector<std::size_t> witness_reps;
};

BruteKappaResult brute_kappa_detail(const FiniteAbelianGroup& g,
                                    std::size_t max_order = 512);
std::size_t brute_kappa(const FiniteAbelianGroup& g,
                        std::size_t max_order = 512);

// Mixed-radix element coding (first factor fastest), matching the dense
// representation used by the brute-force search.
IntVec element_from_index(const FiniteAbelianGroup& g, std::size_t index);
std::size_t index_of_element(const FiniteAbelianGroup& g, const IntVec& v);

}  // namespace helly::abelian
