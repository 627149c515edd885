#include "inertia/stack.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

bool GroupElement::operator==(const GroupElement& o) const {
  return finite == o.finite && angle == o.angle;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (finite != o.finite) return finite < o.finite;
  return angle < o.angle;
}

FiniteLattice::FiniteLattice(std::vector<long> orders_in) : orders(std::move(orders_in)) {
  for (long n : orders) {
    assert(n >= 1);
    size *= n;
  }
}

long FiniteLattice::index(const std::vector<long>& residues) const {
  assert(residues.size() == orders.size());
  long idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) {
    long r = residues[i] % orders[i];
    if (r < 0) r += orders[i];
    idx = idx * orders[i] + r;
  }
  return idx;
}

std::vector<long> FiniteLattice::residues(long index) const {
  std::vector<long> r(orders.size(), 0);
  for (long i = long(orders.size()) - 1; i >= 0; --i) {
    r[i] = index % orders[i];
    index /= orders[i];
  }
  return r;
}

long FiniteLattice::add(long i, long j) const {
  std::vector<long> a = residues(i), b = residues(j);
  for (size_t k = 0; k < orders.size(); ++k) a[k] = (a[k] + b[k]) % orders[k];
  return index(a);
}

long FiniteLattice::negate(long i) const {
  std::vector<long> a = residues(i);
  for (size_t k = 0; k < orders.size(); ++k) a[k] = (orders[k] - a[k]) % orders[k];
  return index(a);
}

void VirtualBundle::add(const Character& w, const Rat& mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms.emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
}

VirtualBundle& VirtualBundle::operator+=(const VirtualBundle& o) {
  for (const auto& [w, m] : o.terms) add(w, m);
  return *this;
}

VirtualBundle& VirtualBundle::operator-=(const VirtualBundle& o) {
  for (const auto& [w, m] : o.terms) add(w, Rat(-m));
  return *this;
}

VirtualBundle VirtualBundle::operator+(const VirtualBundle& o) const {
  VirtualBundle r = *this;
  r += o;
  return r;
}

VirtualBundle VirtualBundle::operator-(const VirtualBundle& o) const {
  VirtualBundle r = *this;
  r -= o;
  return r;
}

Rat VirtualBundle::rank() const {
  Rat r(0);
  for (const auto& [w, m] : terms) r += m;
  return r;
}

VirtualBundle VirtualBundle::dual() const {
  VirtualBundle r;
  for (const auto& [w, m] : terms) {
    Character nw = w;
    for (long& b : nw.finite) b = -b;  // normalised on use via angles
    nw.torus = -nw.torus;
    r.add(nw, m);
  }
  return r;
}

bool VirtualBundle::is_integral() const {
  for (const auto& [w, m] : terms)
    if (!is_integer(m)) return false;
  return true;
}

bool VirtualBundle::is_effective() const {
  for (const auto& [w, m] : terms)
    if (!is_integer(m) || m < 0) return false;
  return true;
}

Stack::Stack(ActionSpec action)
    : action_(std::move(action)), lattice_([&] {
        for (long n : action_.group.finite_orders)
          if (n < 1) fail(Errc::ValidationError, "finite factor orders must be >= 1");
        return FiniteLattice(action_.group.finite_orders);
      }()) {
  GroupSpec& g = action_.group;
  if (g.torus_rank != 0 && g.torus_rank != 1)
    fail(Errc::ValidationError, "torus rank must be 0 or 1");
  for (Character& w : action_.weights) {
    if (w.finite.size() != g.finite_orders.size())
      fail(Errc::ValidationError, "weight has wrong number of finite exponents");
    for (size_t i = 0; i < w.finite.size(); ++i) {
      w.finite[i] %= g.finite_orders[i];
      if (w.finite[i] < 0) w.finite[i] += g.finite_orders[i];
    }
    if (g.torus_rank == 0 && w.torus != 0)
      fail(Errc::ValidationError, "torus weight given but the group has no torus factor");
  }
  if (action_.space == SpaceKind::Point) {
    if (!action_.weights.empty())
      fail(Errc::ValidationError, "a point carries no coordinates, but weights were given");
    if (g.torus_rank != 0)
      fail(Errc::InfiniteStabilizer, "a torus factor acting on a point has infinite stabilizer");
  } else {
    if (action_.weights.empty())
      fail(Errc::ValidationError, "affine space minus the origin needs at least one coordinate");
    if (g.torus_rank == 1)
      for (const Character& w : action_.weights)
        if (w.torus <= 0)
          fail(Errc::InfiniteStabilizer,
               "torus weights must be strictly positive on affine space minus the origin");
  }

  // conductor: 2 * lcm of the exponents of all character values on sector
  // elements; the factor 2 keeps half-angle roots e^{i*pi*a} representable
  long exp_fin = 1;
  for (long n : g.finite_orders) exp_fin = lcm_long(exp_fin, n);
  long l = exp_fin;
  if (g.torus_rank == 1)
    for (const Character& w : action_.weights) l = lcm_long(l, w.torus * exp_fin);
  field_ = CyclotomicField::get(2 * l);

  for (const Character& w : action_.weights) tangent_.add(w, Rat(1));
  if (g.torus_rank == 1) tangent_.add(Character{std::vector<long>(g.finite_orders.size(), 0), 0},
                                      Rat(-1));

  enumerate_sectors();
}

void Stack::enumerate_sectors() {
  const GroupSpec& g = action_.group;
  for (long fi = 0; fi < lattice_.size; ++fi) {
    std::vector<long> residues = lattice_.residues(fi);
    std::set<Rat> angles;
    if (g.torus_rank == 0) {
      angles.insert(Rat(0));
    } else {
      for (const Character& w : action_.weights) {
        Rat s(0);
        for (size_t i = 0; i < residues.size(); ++i)
          s += Rat(residues[i] * w.finite[i], g.finite_orders[i]);
        for (long l = 0; l < w.torus; ++l) {
          Rat q = frac_part((Rat(l) - s) / w.torus);
          angles.insert(q);
        }
      }
    }
    for (const Rat& q : angles) {
      GroupElement e{residues, q};
      std::vector<int> fixed = fixed_set(e);
      if (!locus_nonempty(fixed)) continue;
      sectors_.push_back(Sector{e, fixed, Rat(0)});
    }
  }
  std::sort(sectors_.begin(), sectors_.end(),
            [](const Sector& a, const Sector& b) { return a.element < b.element; });
  for (size_t i = 0; i < sectors_.size(); ++i) {
    sectors_[i].age = age(sectors_[i].element);
    sector_index_.emplace(sectors_[i].element, int(i));
  }
}

int Stack::sector_index(const GroupElement& g) const {
  auto it = sector_index_.find(g);
  return it == sector_index_.end() ? -1 : it->second;
}

GroupElement Stack::identity() const {
  return GroupElement{std::vector<long>(action_.group.finite_orders.size(), 0), Rat(0)};
}

GroupElement Stack::mul(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (size_t i = 0; i < r.finite.size(); ++i)
    r.finite[i] = (r.finite[i] + b.finite[i]) % action_.group.finite_orders[i];
  r.angle = frac_part(a.angle + b.angle);
  return r;
}

GroupElement Stack::inverse(const GroupElement& a) const {
  GroupElement r = a;
  for (size_t i = 0; i < r.finite.size(); ++i)
    r.finite[i] = (action_.group.finite_orders[i] - r.finite[i]) % action_.group.finite_orders[i];
  r.angle = frac_part(-a.angle);
  return r;
}

Rat Stack::angle(const GroupElement& g, const Character& w) const {
  Rat s(0);
  for (size_t i = 0; i < g.finite.size(); ++i)
    s += Rat(g.finite[i] * w.finite[i], action_.group.finite_orders[i]);
  s += g.angle * w.torus;
  return frac_part(s);
}

Cyclo Stack::character_value(const GroupElement& g, const Character& w) const {
  return Cyclo::root_of_unity(field_, angle(g, w));
}

VirtualBundle Stack::log_trace(const GroupElement& g, const VirtualBundle& v) const {
  VirtualBundle r;
  for (const auto& [w, m] : v.terms) r.add(w, m * angle(g, w));
  return r;
}

Rat Stack::age(const GroupElement& g) const { return log_trace(g, tangent_).rank(); }

VirtualBundle Stack::normal_bundle(const GroupElement& g) const {
  VirtualBundle r;
  for (const Character& w : action_.weights)
    if (angle(g, w) != 0) r.add(w, Rat(1));
  return r;
}

std::vector<int> Stack::fixed_set(const GroupElement& g) const {
  std::vector<int> fixed;
  for (size_t j = 0; j < action_.weights.size(); ++j)
    if (angle(g, action_.weights[j]) == 0) fixed.push_back(int(j));
  return fixed;
}

bool Stack::locus_nonempty(const std::vector<int>& coords) const {
  return action_.space == SpaceKind::Point || !coords.empty();
}

long Stack::chow_truncation(const std::vector<int>& fixed) const {
  if (action_.group.torus_rank == 1) {
    assert(!fixed.empty());
    return long(fixed.size());
  }
  return 1;  // no torus direction: rationally only degree 0 survives
}

std::string Stack::sector_label(const GroupElement& g) const {
  std::ostringstream out;
  out << "[";
  bool any = false;
  for (size_t i = 0; i < g.finite.size(); ++i) {
    if (i) out << ",";
    out << g.finite[i];
    any = true;
  }
  if (action_.group.torus_rank == 1) {
    if (any) out << ";";
    out << rat_str(g.angle);
    any = true;
  }
  if (!any) out << "0";
  out << "]";
  return out.str();
}

std::string Stack::describe() const {
  std::ostringstream out;
  out << "G = ";
  bool any = false;
  for (long n : action_.group.finite_orders) {
    if (any) out << " x ";
    out << "Z/" << n;
    any = true;
  }
  if (action_.group.torus_rank == 1) {
    if (any) out << " x ";
    out << "C*";
    any = true;
  }
  if (!any) out << "trivial";
  out << " acting on ";
  if (action_.space == SpaceKind::Point)
    out << "a point";
  else
    out << "A^" << dim() << " - 0";
  if (!action_.weights.empty()) {
    out << " with weights ";
    for (size_t j = 0; j < action_.weights.size(); ++j) {
      if (j) out << ", ";
      const Character& w = action_.weights[j];
      if (w.finite.empty()) {
        out << w.torus;
      } else {
        out << "(";
        for (size_t i = 0; i < w.finite.size(); ++i) {
          if (i) out << ",";
          out << w.finite[i];
        }
        if (action_.group.torus_rank == 1) out << ";" << w.torus;
        out << ")";
      }
    }
  }
  out << "; conductor " << conductor();
  return out.str();
}

}  // namespace inertia
