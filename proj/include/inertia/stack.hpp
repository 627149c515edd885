#pragma once

// The geometric side: a diagonal action of G = (finite abelian) x (torus of
// rank <= 1) on affine space or on affine space minus the origin, its sectors
// (group elements with nonempty fixed locus), ages, and logarithmic traces.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "inertia/cyclotomic.hpp"
#include "inertia/rational.hpp"

namespace inertia {

struct GroupSpec {
  std::vector<long> finite_orders;  // cyclic factors Z/n_i, each n_i >= 1
  int torus_rank = 0;               // 0 or 1
};

// A character of G: exponents on the finite factors plus a torus weight.
struct Character {
  std::vector<long> finite;  // reduced mod n_i
  long torus = 0;
  auto operator<=>(const Character&) const = default;
};

// A group element: residues on the finite factors plus a torus angle in [0,1).
// Only finite-order elements are ever stored (angles are rational).
struct GroupElement {
  std::vector<long> finite;
  Rat angle = Rat(0);
  bool operator==(const GroupElement& o) const;
  bool operator<(const GroupElement& o) const;  // lex on residues, then angle
};

enum class SpaceKind { Point, AffineMinusOrigin };

struct ActionSpec {
  GroupSpec group;
  std::vector<Character> weights;  // one per affine coordinate
  SpaceKind space = SpaceKind::Point;
};

// Formal Z- or Q-combination of characters.
struct VirtualBundle {
  std::map<Character, Rat> terms;  // zero coefficients are never stored

  void add(const Character& w, const Rat& mult);
  VirtualBundle& operator+=(const VirtualBundle& o);
  VirtualBundle& operator-=(const VirtualBundle& o);
  VirtualBundle operator+(const VirtualBundle& o) const;
  VirtualBundle operator-(const VirtualBundle& o) const;
  bool operator==(const VirtualBundle& o) const { return terms == o.terms; }
  Rat rank() const;
  VirtualBundle dual() const;          // negates every character
  bool is_integral() const;            // all multiplicities in Z
  bool is_effective() const;           // all multiplicities in Z_{>=0}
  static VirtualBundle line(const Character& w) {
    VirtualBundle v;
    v.add(w, Rat(1));
    return v;
  }
};

struct Sector {
  GroupElement element;
  std::vector<int> fixed;  // sorted coordinate indices with angle(g, w_j) = 0
  Rat age;                 // rank of the logarithmic trace on the tangent bundle
};

class KRing;
class ChowRing;
struct SupportComponent;

// Shared indexing for the finite factor lattice (elements and characters
// of a product of cyclic groups use the same mixed-radix coordinates).
struct FiniteLattice {
  std::vector<long> orders;
  long size = 1;

  explicit FiniteLattice(std::vector<long> orders_in);
  long index(const std::vector<long>& residues) const;
  std::vector<long> residues(long index) const;
  long add(long i, long j) const;
  long negate(long i) const;
};

class Stack {
 public:
  explicit Stack(ActionSpec action);  // InfiniteStabilizer / ValidationError on bad data

  const ActionSpec& action() const { return action_; }
  long dim() const { return long(action_.weights.size()); }
  const FieldPtr& field() const { return field_; }
  long conductor() const { return field_->conductor(); }
  const FiniteLattice& lattice() const { return lattice_; }
  const VirtualBundle& tangent() const { return tangent_; }
  VirtualBundle cotangent() const { return tangent_.dual(); }

  const std::vector<Sector>& sectors() const { return sectors_; }
  int sector_index(const GroupElement& g) const;  // -1 when Fix(g) is empty
  const Sector& sector(int i) const { return sectors_.at(i); }

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  Rat angle(const GroupElement& g, const Character& w) const;      // in [0,1)
  Cyclo character_value(const GroupElement& g, const Character& w) const;
  VirtualBundle log_trace(const GroupElement& g, const VirtualBundle& v) const;
  Rat age(const GroupElement& g) const;
  VirtualBundle normal_bundle(const GroupElement& g) const;  // moving coordinates of Fix(g)
  std::vector<int> fixed_set(const GroupElement& g) const;
  bool locus_nonempty(const std::vector<int>& coords) const;
  long chow_truncation(const std::vector<int>& fixed) const;

  // quotient-ring presentations, cached per fixed locus
  std::shared_ptr<const KRing> k_ring(const std::vector<int>& fixed) const;
  std::shared_ptr<const ChowRing> chow_ring(const std::vector<int>& fixed) const;
  // splitting of a K ring into local pieces, cached per fixed locus
  const std::vector<SupportComponent>& supports(const std::vector<int>& fixed) const;

  std::string sector_label(const GroupElement& g) const;  // e.g. "[1,0;1/3]"
  std::string describe() const;

 private:
  void enumerate_sectors();

  ActionSpec action_;
  FiniteLattice lattice_;
  FieldPtr field_;
  VirtualBundle tangent_;
  std::vector<Sector> sectors_;
  std::map<GroupElement, int> sector_index_;
  mutable std::map<std::vector<int>, std::shared_ptr<const KRing>> k_cache_;
  mutable std::map<std::vector<int>, std::shared_ptr<const ChowRing>> chow_cache_;
  // type-erased: holds std::vector<SupportComponent>, which is incomplete here
  mutable std::map<std::vector<int>, std::shared_ptr<const void>> support_cache_;
};

}  // namespace inertia
