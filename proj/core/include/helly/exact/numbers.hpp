#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace helly::exact {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = a*u + b*v
inline Int ext_gcd(const Int& a, const Int& b, Int& u, Int& v) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

// Euclidean remainder in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// t^e with e possibly negative; t must be nonzero for e < 0.
inline Rat pow_rat(const Rat& t, long e) {
  Rat r = 1;
  Rat base = t;
  if (e < 0) {
    base = Rat(t.get_den(), t.get_num());
    base.canonicalize();  // inverse may carry a negative denominator
  }
  unsigned long k = e >= 0 ? static_cast<unsigned long>(e)
                           : static_cast<unsigned long>(-e);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  r.canonicalize();
  return r;
}

// Accepts "p/q" or plain integers; canonical form out.
inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

}  // namespace helly::exact
