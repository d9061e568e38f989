#include "helly/actions/table_group.hpp"

#include <algorithm>
#include <map>

#include "helly/errors.hpp"

namespace helly::actions {

using detail::DenseGroup;
using detail::ElemSet;

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table)
    : g_(DenseGroup::from_table(table)) {}

bool FiniteGroupTable::is_subgroup(const std::vector<std::size_t>& elems) const {
  if (elems.empty()) return false;
  ElemSet s(g_.n);
  for (std::size_t e : elems) {
    if (e >= g_.n) return false;
    s.set(e);
  }
  if (!s.test(g_.id)) return false;
  for (std::size_t a : elems)
    for (std::size_t b : elems)
      if (!s.test(g_.prod(a, b))) return false;
  return true;
}

bool FiniteGroupTable::is_normal(const std::vector<std::size_t>& elems) const {
  if (!is_subgroup(elems)) return false;
  ElemSet s(g_.n);
  for (std::size_t e : elems) s.set(e);
  for (std::size_t g = 0; g < g_.n; ++g)
    for (std::size_t h : elems)
      if (!s.test(g_.prod(g_.prod(g, h), g_.inv[g]))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FiniteGroupTable::subgroups() const {
  std::vector<std::vector<std::size_t>> out;
  for (const ElemSet& s : detail::enumerate_subgroups(g_))
    out.push_back(s.elements());
  return out;
}

std::vector<std::vector<std::size_t>> FiniteGroupTable::normal_subgroups()
    const {
  std::vector<std::vector<std::size_t>> out;
  for (auto& s : subgroups())
    if (is_normal(s)) out.push_back(std::move(s));
  return out;
}

FiniteGroupTable FiniteGroupTable::subgroup_group(
    const std::vector<std::size_t>& elems) const {
  if (!is_subgroup(elems)) throw domain_error("not a subgroup");
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<std::size_t>> t(elems.size(),
                                          std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      t[i][j] = index.at(g_.prod(elems[i], elems[j]));
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::quotient_group(
    const std::vector<std::size_t>& elems) const {
  if (!is_normal(elems)) throw domain_error("quotient by a non-normal subgroup");
  ElemSet h(g_.n);
  for (std::size_t e : elems) h.set(e);
  std::vector<std::size_t> coset_of(g_.n, g_.n);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < g_.n; ++a) {
    if (coset_of[a] != g_.n) continue;
    std::size_t id = reps.size();
    for (std::size_t x : detail::left_coset(g_, a, h).elements())
      coset_of[x] = id;
    reps.push_back(a);
  }
  std::vector<std::vector<std::size_t>> t(reps.size(),
                                          std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      t[i][j] = coset_of[g_.prod(reps[i], reps[j])];
  return FiniteGroupTable(std::move(t));
}

TableKappaResult brute_kappa_table_detail(const FiniteGroupTable& g,
                                          std::size_t max_order) {
  if (g.order() > max_order)
    throw resource_error("brute_kappa_table: order exceeds bound");
  detail::CriticalSearchResult r = detail::longest_critical_system(g.dense());
  TableKappaResult out;
  out.kappa = r.kappa;
  for (const auto& s : r.witness_subgroups)
    out.witness_subgroups.push_back(s.elements());
  out.witness_reps = r.witness_reps;
  return out;
}

std::size_t brute_kappa_table(const FiniteGroupTable& g,
                              std::size_t max_order) {
  return brute_kappa_table_detail(g, max_order).kappa;
}

FiniteGroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw domain_error("cyclic_group: order zero");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable direct_product(const FiniteGroupTable& a,
                                const FiniteGroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t p = a.prod(x % na, y % na);
      std::size_t q = b.prod(x / na, y / na);
      t[x][y] = q * na + p;
    }
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable dihedral_group(std::size_t n) {
  if (n < 1) throw domain_error("dihedral_group: n >= 1 required");
  const std::size_t o = 2 * n;
  auto enc = [&](std::size_t rot, std::size_t flip) { return flip * n + rot; };
  std::vector<std::vector<std::size_t>> t(o, std::vector<std::size_t>(o));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t g = 0; g < 2; ++g) {
          // (r^i s^f)(r^j s^g) = r^{i + j or i - j} s^{f xor g}
          std::size_t rot = f == 0 ? (i + j) % n : (i + n - j % n) % n;
          t[enc(i, f)][enc(j, g)] = enc(rot, f ^ g);
        }
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable quaternion_group() {
  // elements 1, -1, i, -i, j, -j, k, -k
  auto mul = [](std::size_t a, std::size_t b) -> std::size_t {
    auto sign = [](std::size_t x) { return x & 1; };
    auto axis = [](std::size_t x) { return x >> 1; };  // 0:1, 1:i, 2:j, 3:k
    static const int table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::size_t ax = static_cast<std::size_t>(table[axis(a)][axis(b)]);
    int s = sgn[axis(a)][axis(b)];
    std::size_t parity = sign(a) ^ sign(b) ^ (s < 0 ? 1u : 0u);
    return (ax << 1) | parity;
  };
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable dicyclic_group_12() {
  // a^6 = 1, b^2 = a^3, b a b^{-1} = a^{-1}; elements a^i b^f
  const std::size_t n = 6;
  auto enc = [&](std::size_t i, std::size_t f) { return f * n + i; };
  std::vector<std::vector<std::size_t>> t(12, std::vector<std::size_t>(12));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t g = 0; g < 2; ++g) {
          std::size_t rot, flip;
          if (f == 0) {
            rot = (i + j) % n;
            flip = g;
          } else {
            // (a^i b)(a^j b^g) = a^{i-j} b a^... -> a^{i-j+3g?}; use b a^j = a^{-j} b
            rot = (i + n - j) % n;
            flip = 1 ^ g;
            if (g == 1) rot = (rot + 3) % n;  // b^2 = a^3
          }
          t[enc(i, f)][enc(j, g)] = enc(rot, flip);
        }
  return FiniteGroupTable(std::move(t));
}

namespace {

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::size_t> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<std::size_t>> all;
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return all;
}

FiniteGroupTable permutation_table(
    const std::vector<std::vector<std::size_t>>& perms) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> t(perms.size(),
                                          std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> comp(perms[i].size());
      for (std::size_t k = 0; k < comp.size(); ++k)
        comp[k] = perms[i][perms[j][k]];
      t[i][j] = index.at(comp);
    }
  return FiniteGroupTable(std::move(t));
}

bool even_permutation(const std::vector<std::size_t>& p) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

}  // namespace

FiniteGroupTable symmetric_group(std::size_t n) {
  if (n < 1 || n > 4) throw domain_error("symmetric_group: 1 <= n <= 4");
  return permutation_table(permutations_of(n));
}

FiniteGroupTable alternating_group_4() {
  std::vector<std::vector<std::size_t>> evens;
  for (auto& p : permutations_of(4))
    if (even_permutation(p)) evens.push_back(std::move(p));
  return permutation_table(evens);
}

std::vector<std::pair<std::string, FiniteGroupTable>> group_corpus() {
  std::vector<std::pair<std::string, FiniteGroupTable>> out;
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 20, 24})
    out.emplace_back("C" + std::to_string(n), cyclic_group(n));
  FiniteGroupTable c2 = cyclic_group(2);
  out.emplace_back("C2xC2", direct_product(c2, c2));
  out.emplace_back("C2xC4", direct_product(c2, cyclic_group(4)));
  out.emplace_back("C2xC6", direct_product(c2, cyclic_group(6)));
  out.emplace_back("C2xC8", direct_product(c2, cyclic_group(8)));
  out.emplace_back("C2xC2xC2", direct_product(c2, direct_product(c2, c2)));
  out.emplace_back("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)));
  out.emplace_back("C2xC12", direct_product(c2, cyclic_group(12)));
  out.emplace_back("S3", symmetric_group(3));
  out.emplace_back("D4", dihedral_group(4));
  out.emplace_back("D5", dihedral_group(5));
  out.emplace_back("D6", dihedral_group(6));
  out.emplace_back("D7", dihedral_group(7));
  out.emplace_back("D8", dihedral_group(8));
  out.emplace_back("Q8", quaternion_group());
  out.emplace_back("A4", alternating_group_4());
  out.emplace_back("Dic3", dicyclic_group_12());
  out.emplace_back("S4", symmetric_group(4));
  return out;
}

}  // namespace helly::actions
