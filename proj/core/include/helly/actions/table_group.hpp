#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "helly/detail/dense_group.hpp"

namespace helly::actions {

// A small finite group given by its multiplication table; associativity,
// identity and inverses are verified on construction.
class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return g_.n; }
  std::size_t identity() const { return g_.id; }
  std::size_t prod(std::size_t a, std::size_t b) const { return g_.prod(a, b); }
  std::size_t inverse(std::size_t a) const { return g_.inv[a]; }
  const detail::DenseGroup& dense() const { return g_; }

  bool is_subgroup(const std::vector<std::size_t>& elems) const;
  bool is_normal(const std::vector<std::size_t>& elems) const;
  std::vector<std::vector<std::size_t>> subgroups() const;
  std::vector<std::vector<std::size_t>> normal_subgroups() const;

  // The subgroup as a group in its own right (elements reindexed).
  FiniteGroupTable subgroup_group(const std::vector<std::size_t>& elems) const;
  // Quotient by a normal subgroup; elements are its cosets.
  FiniteGroupTable quotient_group(const std::vector<std::size_t>& elems) const;

 private:
  detail::DenseGroup g_;
};

// Definitional Helly number by exhaustive search, as for abelian groups.
struct TableKappaResult {
  std::size_t kappa = 0;
  std::vector<std::vector<std::size_t>> witness_subgroups;
  std::vector<std::size_t> witness_reps;
};
TableKappaResult brute_kappa_table_detail(const FiniteGroupTable& g,
                                          std::size_t max_order = 48);
std::size_t brute_kappa_table(const FiniteGroupTable& g,
                              std::size_t max_order = 48);

// Table builders for the built-in corpus.
FiniteGroupTable cyclic_group(std::size_t n);
FiniteGroupTable direct_product(const FiniteGroupTable& a,
                                const FiniteGroupTable& b);
FiniteGroupTable dihedral_group(std::size_t n);  // order 2n
FiniteGroupTable quaternion_group();             // Q8
FiniteGroupTable dicyclic_group_12();            // Dic3
FiniteGroupTable symmetric_group(std::size_t n); // n <= 4
FiniteGroupTable alternating_group_4();

// Named corpus spanning orders 2..24 (cyclics, products, dihedrals, Q8, A4,
// Dic3, S4); used by the verification suites.
std::vector<std::pair<std::string, FiniteGroupTable>> group_corpus();

}  // namespace helly::actions
