#include "helly/abelian/progression.hpp"

#include "helly/errors.hpp"

namespace helly::abelian {

using exact::Int;

ArithmeticProgression ArithmeticProgression::make(Int a, Int m) {
  if (m < 0) throw domain_error("progression: negative modulus");
  if (m >= 1) a = exact::mod_floor(a, m);
  return {std::move(a), std::move(m)};
}

bool ArithmeticProgression::contains(const Int& x) const {
  if (m == 0) return x == a;
  return exact::mod_floor(x - a, m) == 0;
}

namespace {

// CRT for a pair; gcd(0, x) = x and lcm(0, x) = 0 make singletons uniform.
std::optional<ArithmeticProgression> intersect_pair(
    const ArithmeticProgression& p, const ArithmeticProgression& q) {
  if (p.m == 0) return q.contains(p.a) ? std::optional(p) : std::nullopt;
  if (q.m == 0) return p.contains(q.a) ? std::optional(q) : std::nullopt;
  Int g, u, v;
  g = exact::ext_gcd(p.m, q.m, u, v);
  Int diff = q.a - p.a;
  if (diff % g != 0) return std::nullopt;
  Int l = p.m / g * q.m;
  // x = p.a + p.m * (diff/g * u mod q.m/g)
  Int t = exact::mod_floor(diff / g * u, q.m / g);
  return ArithmeticProgression::make(p.a + p.m * t, l);
}

}  // namespace

std::optional<ArithmeticProgression> intersect_progressions(
    const std::vector<ArithmeticProgression>& progs) {
  if (progs.empty()) return ArithmeticProgression::make(0, 1);
  std::optional<ArithmeticProgression> acc = progs[0];
  for (std::size_t i = 1; i < progs.size(); ++i) {
    acc = intersect_pair(*acc, progs[i]);
    if (!acc) return std::nullopt;
  }
  return acc;
}

}  // namespace helly::abelian
