#pragma once

// Exact rational scalars.  GMP's canonicalised mpq_class already provides the
// arithmetic contract (reduced fractions, positive denominators, exact ops),
// so Rat is an alias plus the handful of helpers the engine needs.

#include <gmpxx.h>

#include <string>

namespace inertia {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);  // accepts "p" or "p/q"

bool is_integer(const Rat& q);
Int floor_rat(const Rat& q);
Rat frac_part(const Rat& q);  // q - floor(q), always in [0,1)

// checked narrowing, for exponents and indices that must stay machine-sized
long to_long(const Int& z);

long lcm_long(long a, long b);

}  // namespace inertia
