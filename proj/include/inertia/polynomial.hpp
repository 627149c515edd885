#pragma once

// Dense univariate polynomials over Q(zeta_N), ascending coefficients.
// These back the scalar side of quotient-ring arithmetic and the splitting of
// a torus quotient ring into its local factors at roots of unity.

#include <utility>
#include <vector>

#include "inertia/cyclotomic.hpp"

namespace inertia {

using CPoly = std::vector<Cyclo>;

long cpoly_deg(const CPoly& p);  // -1 for zero
void cpoly_strip(CPoly& p);
CPoly cpoly_add(const CPoly& a, const CPoly& b);
CPoly cpoly_sub(const CPoly& a, const CPoly& b);
CPoly cpoly_mul(const CPoly& a, const CPoly& b);
CPoly cpoly_scale(const Cyclo& c, const CPoly& a);
Cyclo cpoly_eval(const CPoly& p, const Cyclo& x);
// quotient and remainder; divisor must have a unit (nonzero) leading coefficient
std::pair<CPoly, CPoly> cpoly_divmod(const CPoly& a, const CPoly& b);
CPoly cpoly_mod(const CPoly& a, const CPoly& b);
// coefficients of p(u + r) as a polynomial in u
CPoly cpoly_taylor(const CPoly& p, const Cyclo& r);

// One local factor of F[x]/<modulus>: modulus = prod (x - root)^multiplicity.
struct CrtComponent {
  Cyclo root;
  long root_exp;  // root = zeta^root_exp
  long multiplicity;
  CPoly idempotent;  // reduced mod modulus; 1 in this factor, 0 in the others
};

// Splits a modulus whose roots are all N-th roots of unity of the coefficient
// field; IncompleteSplitting if part of the modulus has no such root.
// Components are ordered by the exponent k of the root zeta^k.
std::vector<CrtComponent> crt_idempotents(const CPoly& modulus);

}  // namespace inertia
