#include <map>
#include <random>

#include "acceptance.hpp"
#include "helly/abelian/group.hpp"
#include "helly/abelian/progression.hpp"

namespace acceptance {

namespace {

using helly::abelian::ArithmeticProgression;
using helly::abelian::FiniteAbelianGroup;
using helly::exact::Int;
using helly::exact::IntVec;

FiniteAbelianGroup group_of(const std::vector<long>& factors) {
  IntVec f;
  for (long v : factors) f.emplace_back(v);
  return FiniteAbelianGroup(std::move(f));
}

void partitions_of(long e, long max_part, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(e - p, p, cur, out);
    cur.pop_back();
  }
}

// All abelian groups of order n as invariant factor chains: combine one
// partition of each prime exponent, aligning largest parts.
std::vector<std::vector<long>> abelian_groups_of_order(long n) {
  std::map<long, long> primes;
  long m = n;
  for (long p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++primes[p];
      m /= p;
    }
  if (m > 1) ++primes[m];

  std::vector<std::vector<std::vector<long>>> per_prime;  // partitions
  std::vector<long> plist;
  for (auto& [p, e] : primes) {
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    partitions_of(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
    plist.push_back(p);
  }

  std::vector<std::vector<long>> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  for (;;) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      k = std::max(k, per_prime[i][choice[i]].size());
    std::vector<long> factors(k, 1);
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& part = per_prime[i][choice[i]];  // descending parts
      for (std::size_t j = 0; j < part.size(); ++j) {
        long pw = 1;
        for (long t = 0; t < part[j]; ++t) pw *= plist[i];
        factors[j] *= pw;  // factors[0] largest
      }
    }
    std::reverse(factors.begin(), factors.end());  // ascending chain
    out.push_back(std::move(factors));
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_prime[i].size())
      choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

bool criterion1(std::ostream& detail) {
  std::vector<std::vector<long>> corpus;
  for (long n = 2; n <= 36; ++n)
    for (auto& g : abelian_groups_of_order(n)) corpus.push_back(std::move(g));
  for (std::vector<long> extra :
       {std::vector<long>{48}, {64}, {100}, {128}, {200}, {10, 10}, {2, 64},
        {5, 25}, {14, 14}})
    corpus.push_back(std::move(extra));

  std::size_t checked = 0;
  for (const auto& factors : corpus) {
    FiniteAbelianGroup g = group_of(factors);
    std::size_t expected = helly::abelian::min_generators(g) + 1;
    std::size_t got = helly::abelian::brute_kappa(g);
    if (got != expected) {
      detail << "factors(";
      for (long f : factors) detail << f << " ";
      detail << ") brute=" << got << " formula=" << expected;
      return false;
    }
    ++checked;
  }
  detail << checked << " groups, orders 2..200";
  return true;
}

bool criterion2(std::ostream& detail) {
  std::size_t systems = 0;
  for (long p : {2, 3, 5})
    for (std::size_t d = 1; d <= 4; ++d) {
      // witness_system revalidates emptiness and all d-subsets internally
      auto sys = helly::abelian::witness_system(p, d);
      if (sys.size() != d + 1) {
        detail << "p=" << p << " d=" << d << ": wrong length";
        return false;
      }
      if (helly::abelian::intersect_cosets(sys)) {
        detail << "p=" << p << " d=" << d << ": nonempty total";
        return false;
      }
      ++systems;
    }
  detail << systems << " witness systems";
  return true;
}

bool criterion3(std::ostream& detail) {
  std::mt19937_64 rng(0xACCE550);
  auto rnd = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  std::size_t pairwise_families = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t count = 2 + rng() % 7;
    std::vector<ArithmeticProgression> ps;
    bool anchored = rng() % 2;
    long anchor = rnd(-100000, 100000);
    for (std::size_t i = 0; i < count; ++i) {
      long m = rnd(1, 1000);
      long a = anchored && (rng() % 4 != 0) ? anchor : rnd(0, m - 1);
      ps.push_back(ArithmeticProgression::make(a, m));
    }
    bool pairwise = true;
    std::pair<std::size_t, std::size_t> bad{0, 0};
    for (std::size_t i = 0; i < count && pairwise; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        if (!helly::abelian::intersect_progressions({ps[i], ps[j]})) {
          pairwise = false;
          bad = {i, j};
          break;
        }
    bool global = helly::abelian::intersect_progressions(ps).has_value();
    if (pairwise) {
      ++pairwise_families;
      if (!global) {
        detail << "pairwise family without a common element at iter " << iter;
        return false;
      }
    } else if (global) {
      detail << "global intersection with a disjoint pair at iter " << iter;
      return false;
    } else {
      // the empty family must expose a disjoint pair (found above)
      if (helly::abelian::intersect_progressions({ps[bad.first], ps[bad.second]})) {
        detail << "certificate pair not disjoint";
        return false;
      }
    }
  }
  detail << pairwise_families << " pairwise-intersecting families";
  return pairwise_families > 1000;
}

}  // namespace

std::vector<Criterion> abelian_criteria() {
  return {
      {1, "brute-force Helly numbers match min_generators+1 on the corpus",
       criterion1},
      {2, "hyperplane witness systems are critical for p in {2,3,5}, d <= 4",
       criterion2},
      {3, "kappa(Z) = 2 over 10^4 random progression families", criterion3},
  };
}

}  // namespace acceptance
