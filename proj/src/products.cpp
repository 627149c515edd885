#include "inertia/products.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

std::vector<int> all_coords(const Stack& s) {
  std::vector<int> r(s.dim());
  for (long j = 0; j < s.dim(); ++j) r[j] = int(j);
  return r;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

VirtualBundle lr_tangent_on(const Stack& s, const GroupElement& g1, const GroupElement& g2,
                            const std::vector<int>& coords) {
  std::vector<int> f1 = intersect_sorted(s.fixed_set(g1), coords);
  std::vector<int> f2 = intersect_sorted(s.fixed_set(g2), coords);
  if (!s.locus_nonempty(intersect_sorted(f1, f2)))
    fail(Errc::EmptyPairLocus, "sectors " + s.sector_label(g1) + " and " + s.sector_label(g2) +
                                   " have disjoint fixed loci");
  GroupElement g3 = s.inverse(s.mul(g1, g2));
  VirtualBundle r;
  for (int j : coords) {
    const Character& w = s.action().weights[j];
    Rat sum = s.angle(g1, w) + s.angle(g2, w) + s.angle(g3, w);
    assert(sum == 0 || sum == 1 || sum == 2);
    if (sum == 2) r.add(w, Rat(1));
  }
  return r;
}

VirtualBundle lr_tangent(const Stack& s, const GroupElement& g1, const GroupElement& g2) {
  return lr_tangent_on(s, g1, g2, all_coords(s));
}

VirtualBundle v_plus(const Stack& s, const VirtualBundle& v, const GroupElement& g1,
                     const GroupElement& g2) {
  GroupElement g12 = s.mul(g1, g2);
  VirtualBundle r;
  for (const auto& [w, c] : v.terms)
    r.add(w, c * (s.angle(g1, w) + s.angle(g2, w) - s.angle(g12, w)));
  return r;
}

VirtualBundle v_minus(const Stack& s, const VirtualBundle& v, const GroupElement& g1,
                      const GroupElement& g2) {
  GroupElement i1 = s.inverse(g1), i2 = s.inverse(g2), i12 = s.inverse(s.mul(g1, g2));
  VirtualBundle r;
  for (const auto& [w, c] : v.terms)
    r.add(w, c * (s.angle(i1, w) + s.angle(i2, w) - s.angle(i12, w)));
  return r;
}

VirtualBundle obstruction_raw(const Stack& s, const InertialPair& p, const GroupElement& g1,
                              const GroupElement& g2, const std::vector<int>& coords) {
  VirtualBundle r = lr_tangent_on(s, g1, g2, coords);
  switch (p.kind) {
    case PairKind::Orbifold:
      break;
    case PairKind::VPlus:
      r += v_plus(s, p.bundle, g1, g2);
      break;
    case PairKind::VMinus:
      r += v_minus(s, p.bundle, g1, g2);
      break;
    case PairKind::Virtual:
      r += v_minus(s, s.tangent(), g1, g2);
      break;
  }
  return r;
}

VirtualBundle obstruction(const Stack& s, const InertialPair& p, const GroupElement& g1,
                          const GroupElement& g2) {
  VirtualBundle r = obstruction_raw(s, p, g1, g2, all_coords(s));
  for (const auto& [w, m] : r.terms) {
    if (!is_integer(m))
      fail(Errc::NonIntegralMultiplicity,
           "obstruction of (" + s.sector_label(g1) + "," + s.sector_label(g2) +
               ") has non-integral multiplicity " + rat_str(m));
    if (m < 0)
      fail(Errc::NegativeMultiplicity,
           "obstruction of (" + s.sector_label(g1) + "," + s.sector_label(g2) +
               ") has negative multiplicity " + rat_str(m));
  }
  return r;
}

VirtualBundle s_class(const Stack& s, const InertialPair& p, const GroupElement& g) {
  switch (p.kind) {
    case PairKind::Orbifold:
      return s.log_trace(g, s.tangent());
    case PairKind::VPlus:
      return s.log_trace(g, s.tangent()) + s.log_trace(g, p.bundle);
    case PairKind::VMinus:
      return s.log_trace(g, s.tangent()) + s.log_trace(s.inverse(g), p.bundle);
    case PairKind::Virtual:
      return s.log_trace(g, s.tangent()) + s.log_trace(s.inverse(g), s.tangent());
  }
  return {};
}

Rat s_age(const Stack& s, const InertialPair& p, const GroupElement& g) {
  return s_class(s, p, g).rank();
}

namespace {

void check_inputs(const Stack& s, const InertiaKClass& x, const InertiaKClass& y) {
  if (x.stack != &s || y.stack != &s)
    fail(Errc::StackMismatch, "product arguments live on a different stack");
}

}  // namespace

std::map<int, KClass> product_k_view(const Stack& s, const InertialPair& p,
                                     const std::map<int, KClass>& x,
                                     const std::map<int, KClass>& y,
                                     const std::vector<int>& active) {
  std::map<int, KClass> out;
  for (const auto& [i1, c1] : x) {
    for (const auto& [i2, c2] : y) {
      const GroupElement& g1 = s.sector(i1).element;
      const GroupElement& g2 = s.sector(i2).element;
      std::vector<int> f1 = intersect_sorted(s.sector(i1).fixed, active);
      std::vector<int> f2 = intersect_sorted(s.sector(i2).fixed, active);
      std::vector<int> f12 = intersect_sorted(f1, f2);
      if (!s.locus_nonempty(f12)) continue;
      GroupElement g12 = s.mul(g1, g2);
      int target = s.sector_index(g12);
      assert(target >= 0);  // Fix(g1 g2) contains the nonempty pair locus
      VirtualBundle r = obstruction_raw(s, p, g1, g2, active);
      KRingPtr pair_ring = s.k_ring(f12);
      KClass val = restrict_k(c1, pair_ring) * restrict_k(c2, pair_ring) * euler_k(pair_ring, r);
      KRingPtr target_ring = s.k_ring(intersect_sorted(s.sector(target).fixed, active));
      KClass pushed = push_k(val, target_ring);
      if (pushed.is_zero()) continue;
      auto it = out.find(target);
      if (it == out.end()) {
        out.emplace(target, pushed);
      } else {
        it->second = it->second + pushed;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

InertiaKClass product_k(const Stack& s, const InertialPair& p, const InertiaKClass& x,
                        const InertiaKClass& y) {
  check_inputs(s, x, y);
  InertiaKClass r = InertiaKClass::zero(s);
  for (auto& [sec, c] : product_k_view(s, p, x.parts, y.parts, all_coords(s)))
    r.add_part(sec, c);
  return r;
}

InertiaChowClass product_chow(const Stack& s, const InertialPair& p, const InertiaChowClass& x,
                              const InertiaChowClass& y) {
  if (x.stack != &s || y.stack != &s)
    fail(Errc::StackMismatch, "product arguments live on a different stack");
  InertiaChowClass out = InertiaChowClass::zero(s);
  for (const auto& [i1, c1] : x.parts) {
    for (const auto& [i2, c2] : y.parts) {
      const GroupElement& g1 = s.sector(i1).element;
      const GroupElement& g2 = s.sector(i2).element;
      std::vector<int> f12 = intersect_sorted(s.sector(i1).fixed, s.sector(i2).fixed);
      if (!s.locus_nonempty(f12)) continue;
      GroupElement g12 = s.mul(g1, g2);
      int target = s.sector_index(g12);
      assert(target >= 0);
      VirtualBundle r = obstruction(s, p, g1, g2);
      ChowRingPtr pair_ring = s.chow_ring(f12);
      ChowClass val =
          restrict_chow(c1, pair_ring) * restrict_chow(c2, pair_ring) * euler_chow(pair_ring, r);
      ChowClass pushed = push_chow(val, s.chow_ring(s.sector(target).fixed));
      out.add_part(target, pushed);
    }
  }
  return out;
}

Rat graded_degree(const Stack& s, const InertialPair& p, int sector, const ChowClass& x) {
  assert(x.valid());
  long found = -1;
  for (long k = 0; k < x.series().order(); ++k) {
    if (x.series().c[k].is_zero()) continue;
    if (found >= 0)
      fail(Errc::NonHomogeneous, "class " + x.str() + " mixes t^" + std::to_string(found) +
                                     " and t^" + std::to_string(k));
    found = k;
  }
  if (found < 0) fail(Errc::NonHomogeneous, "the zero class has no single degree");
  return Rat(found) + s_age(s, p, s.sector(sector).element);
}

Cyclo theta_scalar(const Stack& s, const VirtualBundle& v, const GroupElement& g) {
  Rat a = s.log_trace(s.inverse(g), v).rank();
  // e^{i pi a} = e^{2 pi i (a/2)}
  return Cyclo::root_of_unity(s.field(), frac_part(a / 2));
}

InertiaChowClass theta_twist(const Stack& s, const VirtualBundle& v, const InertiaChowClass& x) {
  if (x.stack != &s) fail(Errc::StackMismatch, "twist argument lives on a different stack");
  InertiaChowClass r = InertiaChowClass::zero(s);
  for (const auto& [sec, c] : x.parts)
    r.add_part(sec, c.scaled(theta_scalar(s, v, s.sector(sec).element)));
  return r;
}

InertiaKClass theta_twist(const Stack& s, const VirtualBundle& v, const InertiaKClass& x) {
  if (x.stack != &s) fail(Errc::StackMismatch, "twist argument lives on a different stack");
  InertiaKClass r = InertiaKClass::zero(s);
  for (const auto& [sec, c] : x.parts)
    r.add_part(sec, c.scaled(theta_scalar(s, v, s.sector(sec).element)));
  return r;
}

namespace {

std::string pair_label(const Stack& s, const GroupElement& a, const GroupElement& b) {
  return "(" + s.sector_label(a) + "," + s.sector_label(b) + ")";
}

// excess intersection correction for the square comparing the two ways of
// composing three sectors: characters of coordinates in Fix(gh) \ F_gh minus
// those also fixed by the third element but not by all three
VirtualBundle excess(const Stack& s, const GroupElement& g, const GroupElement& h,
                     const GroupElement& third) {
  std::vector<int> fgh = intersect_sorted(s.fixed_set(g), s.fixed_set(h));
  std::vector<int> fix_prod = s.fixed_set(s.mul(g, h));
  std::vector<int> fix_third = s.fixed_set(third);
  VirtualBundle r;
  for (int j : fix_prod) {
    bool in_pair = std::binary_search(fgh.begin(), fgh.end(), j);
    bool in_third = std::binary_search(fix_third.begin(), fix_third.end(), j);
    Rat m = Rat(1) - Rat(in_pair ? 1 : 0) - Rat(in_third ? 1 : 0) +
            Rat(in_pair && in_third ? 1 : 0);
    r.add(s.action().weights[j], m);
  }
  return r;
}

}  // namespace

PairCheckReport check_inertial_pair(const Stack& s, const InertialPair& p) {
  PairCheckReport rep;
  rep.pair_name = p.name;
  const auto& sectors = s.sectors();
  const std::vector<int> all = all_coords(s);

  for (const Sector& sec : sectors) {
    VirtualBundle sg = s_class(s, p, sec.element);
    if (!is_integer(sg.rank())) rep.gorenstein = false;
    if (!sg.is_effective()) rep.strongly_gorenstein = false;
  }

  for (size_t i = 0; i < sectors.size(); ++i) {
    for (size_t j = 0; j < sectors.size(); ++j) {
      const GroupElement& g1 = sectors[i].element;
      const GroupElement& g2 = sectors[j].element;
      std::vector<int> f12 = intersect_sorted(sectors[i].fixed, sectors[j].fixed);
      if (!s.locus_nonempty(f12)) continue;
      VirtualBundle r12 = obstruction_raw(s, p, g1, g2, all);
      if (!r12.is_effective()) {
        rep.obstructions_ok = false;
        rep.failures.push_back("obstruction at " + pair_label(s, g1, g2) +
                               " is not a vector bundle class");
      }
      if ((g1 == s.identity() || g2 == s.identity()) && !r12.terms.empty()) {
        rep.identity_ok = false;
        rep.failures.push_back("nonzero obstruction at " + pair_label(s, g1, g2));
      }
      if (j < i) {
        if (!(r12 == obstruction_raw(s, p, g2, g1, all))) {
          rep.symmetry_ok = false;
          rep.failures.push_back("asymmetric obstruction at " + pair_label(s, g1, g2));
        }
      }
      // Chern compatibility: R = S(g1) + S(g2) - S(g1 g2) + T_mu
      GroupElement g12 = s.mul(g1, g2);
      VirtualBundle expect = s_class(s, p, g1) + s_class(s, p, g2) - s_class(s, p, g12);
      for (int c : s.fixed_set(g12))
        if (!std::binary_search(f12.begin(), f12.end(), c))
          expect.add(s.action().weights[c], Rat(-1));
      if (!(r12 == expect)) {
        rep.chern_ok = false;
        rep.failures.push_back("grading incompatible with obstruction at " +
                               pair_label(s, g1, g2));
      }
    }
  }

  for (size_t i = 0; i < sectors.size(); ++i) {
    for (size_t j = 0; j < sectors.size(); ++j) {
      for (size_t k = 0; k < sectors.size(); ++k) {
        const GroupElement& g1 = sectors[i].element;
        const GroupElement& g2 = sectors[j].element;
        const GroupElement& g3 = sectors[k].element;
        std::vector<int> f123 = intersect_sorted(
            intersect_sorted(sectors[i].fixed, sectors[j].fixed), sectors[k].fixed);
        if (!s.locus_nonempty(f123)) continue;
        VirtualBundle lhs =
            obstruction_raw(s, p, g1, g2, all) + obstruction_raw(s, p, s.mul(g1, g2), g3, all) +
            excess(s, g1, g2, g3);
        VirtualBundle rhs =
            obstruction_raw(s, p, g2, g3, all) + obstruction_raw(s, p, g1, s.mul(g2, g3), all) +
            excess(s, g2, g3, g1);
        if (!(lhs == rhs)) {
          rep.cocycle_ok = false;
          rep.failures.push_back("cocycle fails at (" + s.sector_label(g1) + "," +
                                 s.sector_label(g2) + "," + s.sector_label(g3) + ")");
        }
      }
    }
  }
  return rep;
}

}  // namespace inertia
