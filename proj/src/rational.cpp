#include "inertia/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "inertia/errors.hpp"

namespace inertia {

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Rat frac_part(const Rat& q) {
  Rat r = q - Rat(floor_rat(q));
  r.canonicalize();
  return r;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
  return z.get_si();
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace inertia
