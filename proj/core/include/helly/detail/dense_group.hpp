#pragma once
#include <cstdint>
#include <cstddef>
#include <vector>

#include "helly/exact/numbers.hpp"

namespace helly::detail {

// Element subset of a group of order n, packed bitset.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  std::size_t count() const;
  std::size_t min_element() const;  // n if empty

  ElemSet& operator&=(const ElemSet& o);
  ElemSet& operator|=(const ElemSet& o);
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  bool is_subset_of(const ElemSet& o) const;

  std::vector<std::size_t> elements() const;

  friend struct ElemSetLess;
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElemSetLess {
  bool operator()(const ElemSet& a, const ElemSet& b) const {
    return a.w_ < b.w_;
  }
};

// Multiplication-table view of a small finite group; identity has index id.
struct DenseGroup {
  std::size_t n = 0;
  std::vector<std::size_t> mul;  // n*n, row-major
  std::vector<std::size_t> inv;
  std::size_t id = 0;

  std::size_t prod(std::size_t a, std::size_t b) const { return mul[a * n + b]; }

  // Validates associativity, identity and inverses; throws domain_error.
  static DenseGroup from_table(const std::vector<std::vector<std::size_t>>& t);
  // Mixed-radix abelian group with the given (small) invariant factors.
  static DenseGroup from_abelian(const std::vector<long>& factors);
};

// All subgroups as element sets; throws resource_error past subgroup_cap.
std::vector<ElemSet> enumerate_subgroups(const DenseGroup& g,
                                         std::size_t subgroup_cap = 20000);

// Left coset a*H as an element set.
ElemSet left_coset(const DenseGroup& g, std::size_t a, const ElemSet& h);

struct CriticalSearchResult {
  std::size_t kappa = 0;  // longest critical system; 0 for the trivial group
  std::vector<ElemSet> witness_subgroups;
  std::vector<std::size_t> witness_reps;
};

// Longest system of left cosets with empty total intersection whose proper
// subsystems all intersect. Searches translation-normalized systems over the
// subgroup lattice; exact for any group presented as a table.
CriticalSearchResult longest_critical_system(const DenseGroup& g,
                                             std::size_t subgroup_cap = 20000);

}  // namespace helly::detail
