#pragma once

// Chern characters on the inertia stack.  The plain Chern character sends a
// K class to its exponential image in the rational Chow ring of the same
// locus; the inertial variant twists each sector by the inverse Todd series
// of the grading bundle S, which is exactly the correction that makes it a
// ring homomorphism for the corresponding inertial product.

#include <map>

#include "inertia/products.hpp"
#include "inertia/rings.hpp"
#include "inertia/series.hpp"

namespace inertia {

// Todd series c/(1 - e^{-c}) of a line with c = m*t, mod t^order
Series todd_series(const FieldPtr& f, long order, long m);
// prod over the characters of sv of Td(m_w t)^{-mult_w}; fractional
// multiplicities are allowed (series powers with rational exponents)
Series todd_twist(const Stack& s, const VirtualBundle& sv, long order);

// additive Chern character of one K class; torsion characters map to 1
ChowClass chern_k(const KClass& x);

InertiaChowClass inertial_chern(const Stack& s, const InertialPair& p, const InertiaKClass& x);
// S-degree-0 part of the inertial Chern character: nonzero only on sectors of
// S-age zero, one scalar per sector carried by x
std::map<int, Cyclo> inertial_rank(const Stack& s, const InertialPair& p,
                                   const InertiaKClass& x);

}  // namespace inertia
