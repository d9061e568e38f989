#pragma once
#include <utility>
#include <cstddef>
#include <vector>

#include "helly/exact/numbers.hpp"

namespace helly::rank2 {

using exact::Int;
using exact::Rat;

// A projective root / linear form p*x + q*y up to scalar: gcd(p, q) = 1 and
// the first nonzero entry positive.
struct ProjectiveRoot {
  Int p, q;

  static ProjectiveRoot make(Int p, Int q);
  friend bool operator==(const ProjectiveRoot& a, const ProjectiveRoot& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const ProjectiveRoot& a, const ProjectiveRoot& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

inline const ProjectiveRoot root_x{1, 0};
inline const ProjectiveRoot root_y{0, 1};

// Binary form in factored representation: coeff * prod of root powers.
struct FactoredForm {
  Rat coeff = 1;
  std::vector<std::pair<ProjectiveRoot, std::size_t>> roots;  // mult >= 1

  static FactoredForm make(Rat coeff,
                           std::vector<std::pair<ProjectiveRoot, std::size_t>>);
  std::size_t degree() const;
  bool is_monomial_in(const ProjectiveRoot& a, const ProjectiveRoot& b) const;
};

// Convenience constructor from small integer root pairs.
FactoredForm form_of(Rat coeff,
                     std::vector<std::pair<std::pair<long, long>, std::size_t>>
                         root_powers);

// m_L(f): maximal n with L^n dividing f.
std::size_t multiplicity(const FactoredForm& f, const ProjectiveRoot& l);

// Roots of multiplicity >= degree/2; at most two, two only for c*(L1 L2)^e.
std::vector<ProjectiveRoot> high_mult_roots(const FactoredForm& f);

// Common roots of high multiplicity across a tuple of forms.
std::vector<ProjectiveRoot> common_high_root(
    const std::vector<FactoredForm>& forms);

// Dense coefficients c_j of x^j y^(d-j), j = 0..d.
exact::RatVec expand(const FactoredForm& f);

// Apply the substitution sending each root L to L o g^{-1}; g in SL2(Q) given
// by the four entries of g^{-1}. Factored representation is preserved.
FactoredForm substitute(const FactoredForm& f, const Rat& a, const Rat& b,
                        const Rat& c, const Rat& d);

// An SL2(Q) matrix g (returned as the entries of g^{-1}) mapping the line of
// l1 to x and, when l2 is given, the line of l2 to y.
struct BasisChange {
  Rat ia, ib, ic, id;  // entries of g^{-1}
};
BasisChange adapt_to_line(const ProjectiveRoot& l1);
BasisChange adapt_to_pair(const ProjectiveRoot& l1, const ProjectiveRoot& l2);

// Distinct roots across a tuple.
std::vector<ProjectiveRoot> distinct_roots(
    const std::vector<FactoredForm>& forms);

// A line different from every root in the given list.
ProjectiveRoot fresh_line(const std::vector<ProjectiveRoot>& avoid);

}  // namespace helly::rank2
