#include "helly/detail/dense_group.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "helly/errors.hpp"

namespace helly::detail {

std::size_t ElemSet::count() const {
  std::size_t c = 0;
  for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t ElemSet::min_element() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
  return n_;
}

ElemSet& ElemSet::operator&=(const ElemSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

ElemSet& ElemSet::operator|=(const ElemSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

bool ElemSet::is_subset_of(const ElemSet& o) const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

std::vector<std::size_t> ElemSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t x = w_[k];
    while (x) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

DenseGroup DenseGroup::from_table(
    const std::vector<std::vector<std::size_t>>& t) {
  DenseGroup g;
  g.n = t.size();
  if (g.n == 0) throw domain_error("group table: empty");
  g.mul.resize(g.n * g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    if (t[i].size() != g.n) throw domain_error("group table: not square");
    for (std::size_t j = 0; j < g.n; ++j) {
      if (t[i][j] >= g.n) throw domain_error("group table: index out of range");
      g.mul[i * g.n + j] = t[i][j];
    }
  }
  // identity
  bool have_id = false;
  for (std::size_t e = 0; e < g.n && !have_id; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < g.n && ok; ++x)
      ok = g.prod(e, x) == x && g.prod(x, e) == x;
    if (ok) {
      g.id = e;
      have_id = true;
    }
  }
  if (!have_id) throw domain_error("group table: no identity");
  // inverses
  g.inv.assign(g.n, g.n);
  for (std::size_t x = 0; x < g.n; ++x) {
    for (std::size_t y = 0; y < g.n; ++y)
      if (g.prod(x, y) == g.id && g.prod(y, x) == g.id) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] == g.n) throw domain_error("group table: missing inverse");
  }
  // associativity
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b)
      for (std::size_t c = 0; c < g.n; ++c)
        if (g.prod(g.prod(a, b), c) != g.prod(a, g.prod(b, c)))
          throw domain_error("group table: not associative");
  return g;
}

DenseGroup DenseGroup::from_abelian(const std::vector<long>& factors) {
  std::size_t n = 1;
  for (long f : factors) {
    if (f < 1) throw domain_error("abelian group: invariant factor < 1");
    n *= static_cast<std::size_t>(f);
  }
  DenseGroup g;
  g.n = n;
  g.id = 0;
  g.mul.resize(n * n);
  g.inv.resize(n);
  const std::size_t k = factors.size();
  std::vector<long> xi(k), yi(k);
  auto decode = [&](std::size_t idx, std::vector<long>& out) {
    for (std::size_t c = 0; c < k; ++c) {
      out[c] = static_cast<long>(idx % static_cast<std::size_t>(factors[c]));
      idx /= static_cast<std::size_t>(factors[c]);
    }
  };
  auto encode = [&](const std::vector<long>& v) {
    std::size_t idx = 0;
    for (std::size_t c = k; c-- > 0;)
      idx = idx * static_cast<std::size_t>(factors[c]) +
            static_cast<std::size_t>(v[c]);
    return idx;
  };
  for (std::size_t x = 0; x < n; ++x) {
    decode(x, xi);
    for (std::size_t y = 0; y < n; ++y) {
      decode(y, yi);
      std::vector<long> z(k);
      for (std::size_t c = 0; c < k; ++c) z[c] = (xi[c] + yi[c]) % factors[c];
      g.mul[x * n + y] = encode(z);
    }
    std::vector<long> z(k);
    for (std::size_t c = 0; c < k; ++c) z[c] = (factors[c] - xi[c]) % factors[c];
    g.inv[x] = encode(z);
  }
  return g;
}

namespace {

ElemSet closure(const DenseGroup& g, ElemSet seed) {
  std::vector<std::size_t> elems = seed.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t z : {g.prod(elems[i], elems[j]),
                            g.prod(elems[j], elems[i])})
        if (!seed.test(z)) {
          seed.set(z);
          elems.push_back(z);
        }
  return seed;
}

}  // namespace

ElemSet left_coset(const DenseGroup& g, std::size_t a, const ElemSet& h) {
  ElemSet out(g.n);
  for (std::size_t x : h.elements()) out.set(g.prod(a, x));
  return out;
}

std::vector<ElemSet> enumerate_subgroups(const DenseGroup& g,
                                         std::size_t subgroup_cap) {
  std::set<ElemSet, ElemSetLess> seen;
  ElemSet triv(g.n);
  triv.set(g.id);
  seen.insert(triv);
  std::vector<ElemSet> frontier{triv};
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const ElemSet& h : frontier) {
      for (std::size_t a = 0; a < g.n; ++a) {
        if (h.test(a)) continue;
        // one extension per coset of h is enough
        bool is_rep = true;
        for (std::size_t x : h.elements())
          if (g.prod(a, x) < a) {
            is_rep = false;
            break;
          }
        if (!is_rep) continue;
        ElemSet seed = h;
        seed.set(a);
        ElemSet k = closure(g, std::move(seed));
        if (seen.insert(k).second) {
          if (seen.size() > subgroup_cap)
            throw resource_error("subgroup enumeration cap exceeded");
          next.push_back(std::move(k));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Per-subgroup coset decomposition for fast product sets.
struct CosetTable {
  std::vector<ElemSet> masks;            // one per distinct left coset
  std::vector<std::size_t> coset_index;  // element -> coset id
};

CosetTable build_cosets(const DenseGroup& g, const ElemSet& h) {
  CosetTable t;
  t.coset_index.assign(g.n, g.n);
  for (std::size_t a = 0; a < g.n; ++a) {
    if (t.coset_index[a] != g.n) continue;
    ElemSet m = left_coset(g, a, h);
    std::size_t id = t.masks.size();
    for (std::size_t x : m.elements()) t.coset_index[x] = id;
    t.masks.push_back(std::move(m));
  }
  return t;
}

// P * H as a union of left cosets of H.
ElemSet product_set(const DenseGroup& g, const ElemSet& p, const CosetTable& h,
                    std::size_t n) {
  ElemSet out(n);
  std::vector<char> hit(h.masks.size(), 0);
  for (std::size_t x : p.elements()) {
    std::size_t c = h.coset_index[x];
    if (!hit[c]) {
      hit[c] = 1;
      out |= h.masks[c];
    }
  }
  return out;
}

std::size_t omega(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++c;
    }
  if (n > 1) ++c;
  return c;
}

struct Searcher {
  const DenseGroup& g;
  std::vector<ElemSet> subs;        // sorted: size desc, then lex
  std::vector<CosetTable> cosets;   // parallel to subs
  std::vector<std::size_t> omega_of_size;
  std::size_t cap;                  // a-priori bound Omega(n)+1
  CriticalSearchResult best;

  std::vector<std::size_t> family;
  std::vector<ElemSet> drop_one;  // D_j = intersection of family minus j

  explicit Searcher(const DenseGroup& gr, std::size_t subgroup_cap) : g(gr) {
    subs = enumerate_subgroups(g, subgroup_cap);
    std::sort(subs.begin(), subs.end(), [](const ElemSet& a, const ElemSet& b) {
      std::size_t ca = a.count(), cb = b.count();
      if (ca != cb) return ca > cb;
      return ElemSetLess{}(a, b);
    });
    cosets.reserve(subs.size());
    for (const auto& h : subs) cosets.push_back(build_cosets(g, h));
    omega_of_size.assign(g.n + 1, 0);
    for (std::size_t m = 1; m <= g.n; ++m) omega_of_size[m] = omega(m);
    cap = omega_of_size[g.n] + 1;
  }

  // Try closing the current family with a translated coset of each subgroup.
  void try_close(const ElemSet& p) {
    const std::size_t m = family.size() + 1;
    if (m <= best.kappa) return;
    for (std::size_t h = 0; h < subs.size(); ++h) {
      ElemSet ph = product_set(g, p, cosets[h], g.n);
      ElemSet x(g.n);
      bool first = true;
      bool dead = false;
      for (const ElemSet& dj : drop_one) {
        ElemSet dh = product_set(g, dj, cosets[h], g.n);
        if (first) {
          x = std::move(dh);
          first = false;
        } else {
          x &= dh;
        }
        if (x == ph) {  // can no longer exceed ph
          dead = true;
          break;
        }
      }
      if (dead) continue;
      if (first) x = ph;  // empty family: closing alone (m == 1), never valid
      // representative outside P*H but inside every D_j*H
      std::size_t rep = g.n;
      for (std::size_t k = 0; k < x.words().size(); ++k) {
        std::uint64_t w = x.words()[k] & ~ph.words()[k];
        if (w) {
          rep = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
          break;
        }
      }
      if (rep == g.n) continue;
      best.kappa = m;
      best.witness_subgroups.clear();
      best.witness_reps.clear();
      for (std::size_t j = 0; j < family.size(); ++j) {
        best.witness_subgroups.push_back(subs[family[j]]);
        best.witness_reps.push_back(g.id);
      }
      best.witness_subgroups.push_back(subs[h]);
      best.witness_reps.push_back(rep);
      return;  // longer systems come from deeper nodes
    }
  }

  void dfs(std::size_t from, const ElemSet& p) {
    if (!family.empty()) try_close(p);
    if (best.kappa >= cap) return;
    // potential: member slots left by Lagrange plus the closing coset
    if (family.size() + omega_of_size[p.count()] + 1 <= best.kappa) return;
    for (std::size_t idx = from; idx < subs.size(); ++idx) {
      ElemSet np = p & subs[idx];
      if (np == p) continue;  // members must strictly shrink the core
      bool redundant = false;
      std::vector<ElemSet> nd;
      nd.reserve(family.size() + 1);
      for (const ElemSet& dj : drop_one) {
        ElemSet v = dj & subs[idx];
        if (v == np) {  // redundancy is permanent; prune
          redundant = true;
          break;
        }
        nd.push_back(std::move(v));
      }
      if (redundant) continue;
      nd.push_back(p);
      family.push_back(idx);
      std::vector<ElemSet> saved = std::move(drop_one);
      drop_one = std::move(nd);
      dfs(idx + 1, np);
      drop_one = std::move(saved);
      family.pop_back();
      if (best.kappa >= cap) return;
    }
  }
};

}  // namespace

CriticalSearchResult longest_critical_system(const DenseGroup& g,
                                             std::size_t subgroup_cap) {
  Searcher s(g, subgroup_cap);
  ElemSet all(g.n);
  for (std::size_t i = 0; i < g.n; ++i) all.set(i);
  s.dfs(0, all);
  return std::move(s.best);
}

}  // namespace helly::detail
