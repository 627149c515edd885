#pragma once

// Presentations of equivariant K-theory and rational Chow rings of fixed
// loci.  With a torus factor present the K ring is a quotient of a Laurent
// ring in the torus character chi with coefficients in the finite group
// algebra; without one it is a tuple of values indexed by the finite
// elements whose fixed locus meets the given coordinates.  Chow rings are
// truncated polynomial rings in the hyperplane class t.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "inertia/cyclotomic.hpp"
#include "inertia/series.hpp"
#include "inertia/stack.hpp"

namespace inertia {

// Dense element of the group algebra of the finite character lattice.
using GAElem = std::vector<Cyclo>;

// Value-semantics helper bound to a stack's finite lattice and field.
class GroupAlgebra {
 public:
  explicit GroupAlgebra(const Stack& s) : stack_(&s) {}

  long size() const { return stack_->lattice().size; }
  GAElem zero() const;
  GAElem one() const;
  GAElem monomial(const std::vector<long>& exponents, const Cyclo& coeff) const;
  GAElem add(const GAElem& a, const GAElem& b) const;
  GAElem sub(const GAElem& a, const GAElem& b) const;
  GAElem mul(const GAElem& a, const GAElem& b) const;
  GAElem neg(const GAElem& a) const;
  GAElem scale(const Cyclo& c, const GAElem& a) const;
  bool is_zero(const GAElem& a) const;
  // evaluate the character sum at a finite group element
  Cyclo eval(const GAElem& a, const GroupElement& f) const;
  // inverse of a one-term element (used for unit normalisation of moduli)
  GAElem monomial_inverse(const GAElem& a) const;
  // projector onto the simple summand where characters take their value at f
  GAElem fourier_idempotent(const GroupElement& f) const;
  std::string str(const GAElem& a) const;
  bool is_composite(const GAElem& a) const;  // needs parentheses when printed

 private:
  const Stack* stack_;
};

class KRing {
 public:
  const Stack* stack;
  std::vector<int> fixed;  // sorted coordinate indices of the underlying locus
  bool finite_rep;
  // torus representation: monic modulus prod_{j in fixed} (x^{b_j} chi^{m_j} - 1)
  // (normalised by a unit monomial), plus the reduced representative of chi^{-1}
  std::vector<GAElem> modulus;
  std::vector<GAElem> chi_inv;
  // finite representation: elements whose fixed locus meets `fixed`
  std::vector<GroupElement> support;

  long degree() const { return long(modulus.size()) - 1; }
  long dim() const;  // dimension over Q(zeta)
  long support_pos(const GroupElement& h) const;  // -1 if absent
  std::string presentation() const;
};

using KRingPtr = std::shared_ptr<const KRing>;

class KClass {
 public:
  KClass() = default;  // invalid placeholder
  static KClass zero(const KRingPtr& r);
  static KClass one(const KRingPtr& r);
  // class of the equivariant line bundle with character w (torus exponent may
  // be negative; chi is invertible in the quotient)
  static KClass monomial(const KRingPtr& r, const Character& w);
  static KClass from_poly(const KRingPtr& r, std::vector<GAElem> coeffs);  // reduces
  static KClass from_values(const KRingPtr& r, std::vector<Cyclo> values);

  bool valid() const { return ring_ != nullptr; }
  const KRingPtr& ring() const { return ring_; }
  const std::vector<GAElem>& poly() const { return poly_; }
  const std::vector<Cyclo>& values() const { return values_; }

  bool is_zero() const;
  bool operator==(const KClass& o) const;
  bool operator!=(const KClass& o) const { return !(*this == o); }
  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass operator*(const KClass& o) const;  // RingMismatch across rings
  KClass operator-() const;
  KClass scaled(const Cyclo& c) const;

  std::vector<Cyclo> coords() const;  // canonical coefficient vector, length ring->dim()
  std::string str() const;

 private:
  KRingPtr ring_;
  std::vector<GAElem> poly_;    // dense, size ring->degree()
  std::vector<Cyclo> values_;  // dense over ring->support
};

// K-theoretic Euler class: prod over characters of (1 - e_w^{-1})^mult.
// Multiplicities must be non-negative integers.
KClass euler_k(const KRingPtr& r, const VirtualBundle& v);
// restriction along an inclusion of fixed loci (target.fixed inside source.fixed)
KClass restrict_k(const KClass& x, const KRingPtr& target);
// pushforward along the closed inclusion of the source locus into the target:
// lift, then multiply by the Euler class of the normal directions
KClass push_k(const KClass& x, const KRingPtr& target);

class ChowRing {
 public:
  const Stack* stack;
  std::vector<int> fixed;
  long trunc;  // t^trunc = 0

  std::string presentation() const;
};

using ChowRingPtr = std::shared_ptr<const ChowRing>;

class ChowClass {
 public:
  ChowClass() = default;
  static ChowClass zero(const ChowRingPtr& r);
  static ChowClass one(const ChowRingPtr& r);
  static ChowClass monomial(const ChowRingPtr& r, long k, const Cyclo& coeff);
  static ChowClass from_series(const ChowRingPtr& r, Series s);

  bool valid() const { return ring_ != nullptr; }
  const ChowRingPtr& ring() const { return ring_; }
  const Series& series() const { return s_; }

  bool is_zero() const;
  bool operator==(const ChowClass& o) const;
  bool operator!=(const ChowClass& o) const { return !(*this == o); }
  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass scaled(const Cyclo& c) const;

  std::string str() const;

 private:
  ChowRingPtr ring_;
  Series s_;
};

// Chow Euler class: prod over characters of (m_w * t)^mult.
ChowClass euler_chow(const ChowRingPtr& r, const VirtualBundle& v);
ChowClass restrict_chow(const ChowClass& x, const ChowRingPtr& target);
ChowClass push_chow(const ChowClass& x, const ChowRingPtr& target);

// A class on the inertia stack: one ring element per sector.
struct InertiaKClass {
  const Stack* stack = nullptr;
  std::map<int, KClass> parts;  // sector index -> class; zero parts dropped

  void add_part(int sector, const KClass& x);
  InertiaKClass operator+(const InertiaKClass& o) const;
  bool operator==(const InertiaKClass& o) const;
  static InertiaKClass zero(const Stack& s) { return InertiaKClass{&s, {}}; }
  static InertiaKClass unit(const Stack& s);                       // 1 on the identity sector
  static InertiaKClass sector_unit(const Stack& s, int sector);    // 1 on one sector
};

struct InertiaChowClass {
  const Stack* stack = nullptr;
  std::map<int, ChowClass> parts;

  void add_part(int sector, const ChowClass& x);
  InertiaChowClass operator+(const InertiaChowClass& o) const;
  bool operator==(const InertiaChowClass& o) const;
  static InertiaChowClass zero(const Stack& s) { return InertiaChowClass{&s, {}}; }
  static InertiaChowClass unit(const Stack& s);
};

// Additive bases over Q(zeta), used by the property-test sweeps.
std::vector<InertiaKClass> k_basis(const Stack& s);
std::vector<InertiaChowClass> chow_basis(const Stack& s);

}  // namespace inertia
