#pragma once

// Inertial products on the inertia stack.  A product is determined by an
// inertial pair (R, S): an obstruction bundle R on each pair of sectors and a
// grading bundle S on each sector.  Supported families: the orbifold pair,
// the vplus/vminus deformations attached to a bundle V, and the virtual pair.

#include <map>
#include <string>
#include <vector>

#include "inertia/rings.hpp"
#include "inertia/stack.hpp"

namespace inertia {

enum class PairKind { Orbifold, VPlus, VMinus, Virtual };

struct InertialPair {
  PairKind kind = PairKind::Orbifold;
  VirtualBundle bundle;  // the V of vplus/vminus; unused otherwise
  std::string name = "orbifold";

  static InertialPair orbifold() { return {}; }
  static InertialPair vplus(const VirtualBundle& v, const std::string& vname) {
    return {PairKind::VPlus, v, "vplus(" + vname + ")"};
  }
  static InertialPair vminus(const VirtualBundle& v, const std::string& vname) {
    return {PairKind::VMinus, v, "vminus(" + vname + ")"};
  }
  static InertialPair virt() { return {PairKind::Virtual, {}, "virtual"}; }
};

std::vector<int> all_coords(const Stack& s);
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

// Logarithmic trace obstruction of the tangent directions in `coords`:
// multiplicity of w_j is angle_j(g1) + angle_j(g2) + angle_j((g1 g2)^{-1})
// minus the correction that makes it 0 or 1.  EmptyPairLocus when the pair
// locus inside `coords` is empty.
VirtualBundle lr_tangent_on(const Stack& s, const GroupElement& g1, const GroupElement& g2,
                            const std::vector<int>& coords);
VirtualBundle lr_tangent(const Stack& s, const GroupElement& g1, const GroupElement& g2);
// deformation summands: multiplicity c_w (angle_w(g1) + angle_w(g2) - angle_w(g1 g2)),
// with angles of inverses for the minus variant
VirtualBundle v_plus(const Stack& s, const VirtualBundle& v, const GroupElement& g1,
                     const GroupElement& g2);
VirtualBundle v_minus(const Stack& s, const VirtualBundle& v, const GroupElement& g1,
                      const GroupElement& g2);

// full obstruction bundle of the pair; rational form without integrality checks
VirtualBundle obstruction_raw(const Stack& s, const InertialPair& p, const GroupElement& g1,
                              const GroupElement& g2, const std::vector<int>& coords);
// checked: NonIntegralMultiplicity / NegativeMultiplicity unless effective
VirtualBundle obstruction(const Stack& s, const InertialPair& p, const GroupElement& g1,
                          const GroupElement& g2);

// grading bundle S of the pair on one sector
VirtualBundle s_class(const Stack& s, const InertialPair& p, const GroupElement& g);
Rat s_age(const Stack& s, const InertialPair& p, const GroupElement& g);

InertiaKClass product_k(const Stack& s, const InertialPair& p, const InertiaKClass& x,
                        const InertiaKClass& y);
InertiaChowClass product_chow(const Stack& s, const InertialPair& p, const InertiaChowClass& x,
                              const InertiaChowClass& y);
// product with every locus cut down to the coordinates in `active` (used for
// products on the substack attached to one support element); classes in the
// result live in rings keyed by Fix(g) meet active
std::map<int, KClass> product_k_view(const Stack& s, const InertialPair& p,
                                     const std::map<int, KClass>& x,
                                     const std::map<int, KClass>& y,
                                     const std::vector<int>& active);

// degree of a homogeneous Chow component: t-exponent plus the S-age of the
// sector; NonHomogeneous if more than one t-power appears (or none)
Rat graded_degree(const Stack& s, const InertialPair& p, int sector, const ChowClass& x);

// sector automorphism attached to V: multiplication by e^{i pi a} with
// a = rank of the logarithmic trace of V at g^{-1}
Cyclo theta_scalar(const Stack& s, const VirtualBundle& v, const GroupElement& g);
InertiaChowClass theta_twist(const Stack& s, const VirtualBundle& v, const InertiaChowClass& x);
InertiaKClass theta_twist(const Stack& s, const VirtualBundle& v, const InertiaKClass& x);

struct PairCheckReport {
  std::string pair_name;
  bool obstructions_ok = true;  // every pair obstruction is a vector bundle class
  bool identity_ok = true;      // R(1, g) = R(g, 1) = 0
  bool symmetry_ok = true;      // R(g1, g2) = R(g2, g1)
  bool cocycle_ok = true;       // associativity cocycle with excess corrections
  bool chern_ok = true;         // R = S(g1) + S(g2) - S(g1 g2) + T_mu on every pair
  bool gorenstein = true;            // every S-age is an integer
  bool strongly_gorenstein = true;   // every S is an effective class
  std::vector<std::string> failures;

  bool all_ok() const {
    return obstructions_ok && identity_ok && symmetry_ok && cocycle_ok && chern_ok;
  }
};

PairCheckReport check_inertial_pair(const Stack& s, const InertialPair& p);

}  // namespace inertia
