#pragma once

// Localized products.  Each sector K ring splits into local summands indexed
// by the finite-order elements h whose fixed locus meets the sector's; the
// localized product computes the orbifold product of the h-components on the
// substack of coordinates fixed by h and transports the result back into the
// h-summand of the ambient sector ring.

#include <map>
#include <vector>

#include "inertia/products.hpp"
#include "inertia/rings.hpp"
#include "inertia/stack.hpp"

namespace inertia {

// One central summand of a K ring (declared in stack.hpp, defined here).
struct SupportComponent {
  GroupElement element;
  long multiplicity;  // dimension of the summand over Q(zeta) per finite component
  KClass idempotent;  // projector onto the summand, as a ring element
};

struct LocalizedKClass {
  const Stack* stack = nullptr;
  // sector -> support element -> component (a class in the sector's K ring)
  std::map<int, std::map<GroupElement, KClass>> parts;
};

LocalizedKClass support_decompose(const Stack& s, const InertiaKClass& x);
InertiaKClass reassemble(const LocalizedKClass& x);

// expresses a class of the view ring (fixed locus cut to Fix(h)) as an element
// of the h-summand of the full ring of `sector`; SingularRestriction if the
// local basis degenerates
KClass transport_to_summand(const Stack& s, const GroupElement& h, int sector, const KClass& z);

std::map<GroupElement, InertiaKClass> localized_product_parts(const Stack& s,
                                                              const InertiaKClass& x,
                                                              const InertiaKClass& y);
InertiaKClass localized_product(const Stack& s, const InertiaKClass& x, const InertiaKClass& y);

// Experimental cross-check for the alternative obstruction reading with
// numerator lrT and denominator L(g1) N_{g1} + L(g2) N_{g2} - L(g1 g2) N_{g1 g2}
// (normal bundles of the sectors).  The denominator's Euler class is inverted
// summand-by-summand where it is a unit; the two bundles are never cancelled
// against each other beforehand.  Results are reported, never asserted: the
// reading is only locally defined.
struct NfPairReport {
  int s1 = -1, s2 = -1;
  bool integral = true;                 // denominator is a genuine bundle
  std::vector<GroupElement> singular;   // supports where the denominator is not invertible
  std::vector<GroupElement> evaluated;  // supports where it is
  bool matches = true;  // agrees with the localized product on `evaluated`
};

std::vector<NfPairReport> nf_product_report(const Stack& s);

}  // namespace inertia
