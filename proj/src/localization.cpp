#include "inertia/localization.hpp"

#include <algorithm>
#include <cassert>

#include "inertia/errors.hpp"
#include "inertia/polynomial.hpp"

namespace inertia {

// ------------------------------------------------------- central decomposition

const std::vector<SupportComponent>& Stack::supports(const std::vector<int>& fixed) const {
  auto it = support_cache_.find(fixed);
  if (it != support_cache_.end())
    return *static_cast<const std::vector<SupportComponent>*>(it->second.get());
  KRingPtr r = k_ring(fixed);
  std::vector<SupportComponent> out;
  if (r->finite_rep) {
    for (size_t pos = 0; pos < r->support.size(); ++pos) {
      std::vector<Cyclo> vals(r->support.size(), Cyclo::zero(field_));
      vals[pos] = Cyclo::one(field_);
      out.push_back({r->support[pos], 1, KClass::from_values(r, std::move(vals))});
    }
  } else {
    GroupAlgebra ga(*this);
    for (long fi = 0; fi < lattice_.size; ++fi) {
      GroupElement f{lattice_.residues(fi), Rat(0)};
      // scalar modulus of the Fourier component at f
      CPoly mf;
      mf.reserve(r->modulus.size());
      for (const GAElem& c : r->modulus) mf.push_back(ga.eval(c, f));
      GAElem ef = ga.fourier_idempotent(f);
      for (const CrtComponent& comp : crt_idempotents(mf)) {
        GroupElement h{f.finite, Rat(comp.root_exp, conductor())};
        h.angle.canonicalize();
        h.angle = frac_part(h.angle);
        std::vector<GAElem> poly;
        poly.reserve(comp.idempotent.size());
        for (const Cyclo& c : comp.idempotent) poly.push_back(ga.scale(c, ef));
        out.push_back({h, comp.multiplicity, KClass::from_poly(r, std::move(poly))});
      }
    }
    std::sort(out.begin(), out.end(),
              [](const SupportComponent& a, const SupportComponent& b) {
                return a.element < b.element;
              });
  }
  auto owned = std::make_shared<std::vector<SupportComponent>>(std::move(out));
  support_cache_.emplace(fixed, owned);
  return *owned;
}

namespace {

const SupportComponent* find_support(const std::vector<SupportComponent>& sups,
                                     const GroupElement& h) {
  for (const SupportComponent& c : sups)
    if (c.element == h) return &c;
  return nullptr;
}

// exact row reduction: solve sum_i lambda_i col_i = rhs over Q(zeta)
std::vector<Cyclo> solve_linear(const std::vector<std::vector<Cyclo>>& cols,
                                const std::vector<Cyclo>& rhs, const FieldPtr& field) {
  size_t n = rhs.size(), k = cols.size();
  std::vector<std::vector<Cyclo>> m(n, std::vector<Cyclo>(k + 1, Cyclo::zero(field)));
  for (size_t c = 0; c < k; ++c) {
    assert(cols[c].size() == n);
    for (size_t i = 0; i < n; ++i) m[i][c] = cols[c][i];
  }
  for (size_t i = 0; i < n; ++i) m[i][k] = rhs[i];

  std::vector<size_t> pivot_row(k);
  size_t rank = 0;
  for (size_t c = 0; c < k; ++c) {
    size_t p = rank;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) fail(Errc::SingularRestriction, "local basis column vanished");
    std::swap(m[p], m[rank]);
    Cyclo inv = m[rank][c].inverse();
    for (size_t j = c; j <= k; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      Cyclo factor = m[i][c];
      for (size_t j = c; j <= k; ++j) m[i][j] -= factor * m[rank][j];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (size_t i = rank; i < n; ++i)
    if (!m[i][k].is_zero())
      fail(Errc::SingularRestriction, "class does not lie in the local summand");
  std::vector<Cyclo> lambda;
  lambda.reserve(k);
  for (size_t c = 0; c < k; ++c) lambda.push_back(m[pivot_row[c]][k]);
  return lambda;
}

// basis of the h-summand: idempotent * chi^i, i < multiplicity
std::vector<KClass> summand_basis(const Stack& s, const KRingPtr& ring,
                                  const SupportComponent& comp) {
  std::vector<KClass> basis{comp.idempotent};
  if (!ring->finite_rep) {
    Character chi{std::vector<long>(s.lattice().orders.size(), 0), 1};
    KClass xm = KClass::monomial(ring, chi);
    for (long i = 1; i < comp.multiplicity; ++i) basis.push_back(basis.back() * xm);
  }
  return basis;
}

}  // namespace

LocalizedKClass support_decompose(const Stack& s, const InertiaKClass& x) {
  if (x.stack != &s) fail(Errc::StackMismatch, "decomposition argument on a different stack");
  LocalizedKClass out;
  out.stack = &s;
  for (const auto& [sec, c] : x.parts) {
    for (const SupportComponent& comp : s.supports(c.ring()->fixed)) {
      KClass cut = c * comp.idempotent;
      if (!cut.is_zero()) out.parts[sec].emplace(comp.element, cut);
    }
  }
  return out;
}

InertiaKClass reassemble(const LocalizedKClass& x) {
  assert(x.stack);
  InertiaKClass out = InertiaKClass::zero(*x.stack);
  for (const auto& [sec, comps] : x.parts)
    for (const auto& [h, c] : comps) out.add_part(sec, c);
  return out;
}

KClass transport_to_summand(const Stack& s, const GroupElement& h, int sector, const KClass& z) {
  KRingPtr full = s.k_ring(s.sector(sector).fixed);
  const SupportComponent* comp = find_support(s.supports(full->fixed), h);
  assert(comp && "support element missing from the target ring");
  std::vector<KClass> basis = summand_basis(s, full, *comp);

  const KRingPtr& view = z.ring();
  if (view == full) {
    // nothing to transport; just project into the summand
    return z * comp->idempotent;
  }
  const SupportComponent* vcomp = find_support(s.supports(view->fixed), h);
  assert(vcomp && "support element missing from the view ring");
  KClass zc = z * vcomp->idempotent;

  std::vector<std::vector<Cyclo>> cols;
  cols.reserve(basis.size());
  for (const KClass& b : basis) cols.push_back(restrict_k(b, view).coords());
  std::vector<Cyclo> lambda = solve_linear(cols, zc.coords(), s.field());
  KClass out = KClass::zero(full);
  for (size_t i = 0; i < basis.size(); ++i) out = out + basis[i].scaled(lambda[i]);
  return out;
}

std::map<GroupElement, InertiaKClass> localized_product_parts(const Stack& s,
                                                              const InertiaKClass& x,
                                                              const InertiaKClass& y) {
  if (x.stack != &s || y.stack != &s)
    fail(Errc::StackMismatch, "product arguments live on a different stack");
  std::map<GroupElement, InertiaKClass> out;
  for (const Sector& hs : s.sectors()) {
    const GroupElement& h = hs.element;
    const std::vector<int>& active = hs.fixed;
    std::map<int, KClass> xh, yh;
    for (const auto& [sec, c] : x.parts) {
      const SupportComponent* comp = find_support(s.supports(c.ring()->fixed), h);
      if (!comp) continue;
      KClass cut = c * comp->idempotent;
      if (!cut.is_zero()) xh.emplace(sec, cut);
    }
    for (const auto& [sec, c] : y.parts) {
      const SupportComponent* comp = find_support(s.supports(c.ring()->fixed), h);
      if (!comp) continue;
      KClass cut = c * comp->idempotent;
      if (!cut.is_zero()) yh.emplace(sec, cut);
    }
    if (xh.empty() || yh.empty()) continue;
    InertiaKClass part = InertiaKClass::zero(s);
    for (const auto& [target, zc] : product_k_view(s, InertialPair::orbifold(), xh, yh, active))
      part.add_part(target, transport_to_summand(s, h, target, zc));
    if (!part.parts.empty()) out.emplace(h, part);
  }
  return out;
}

InertiaKClass localized_product(const Stack& s, const InertiaKClass& x, const InertiaKClass& y) {
  InertiaKClass out = InertiaKClass::zero(s);
  for (const auto& [h, part] : localized_product_parts(s, x, y)) out = out + part;
  return out;
}

std::vector<NfPairReport> nf_product_report(const Stack& s) {
  std::vector<NfPairReport> out;
  for (size_t i = 0; i < s.sectors().size(); ++i) {
    for (size_t j = 0; j < s.sectors().size(); ++j) {
      const GroupElement& g1 = s.sector(int(i)).element;
      const GroupElement& g2 = s.sector(int(j)).element;
      std::vector<int> f12 = intersect_sorted(s.sector(int(i)).fixed, s.sector(int(j)).fixed);
      if (!s.locus_nonempty(f12)) continue;
      NfPairReport rep;
      rep.s1 = int(i);
      rep.s2 = int(j);
      GroupElement g12 = s.mul(g1, g2);
      // numerator lrT and denominator L(g1)N1 + L(g2)N2 - L(g1g2)N12 are kept
      // apart: cancelling them as virtual bundles would silently extend the
      // formula across supports where the denominator class is not a unit
      VirtualBundle plus = lr_tangent(s, g1, g2);
      VirtualBundle minus = s.log_trace(g1, s.normal_bundle(g1));
      minus += s.log_trace(g2, s.normal_bundle(g2));
      minus -= s.log_trace(g12, s.normal_bundle(g12));
      for (const auto& [w, m] : minus.terms) {
        if (!is_integer(m) || m < 0) {
          rep.integral = false;
          break;
        }
      }
      if (!rep.integral) {
        out.push_back(std::move(rep));
        continue;
      }

      // localized reference for the pair of sector units
      auto lo_parts = localized_product_parts(s, InertiaKClass::sector_unit(s, int(i)),
                                              InertiaKClass::sector_unit(s, int(j)));
      int target = s.sector_index(g12);
      assert(target >= 0);
      KRingPtr pair_ring = s.k_ring(f12);
      KRingPtr target_ring = s.k_ring(s.sector(target).fixed);
      KClass eplus = euler_k(pair_ring, plus);
      KClass eminus = euler_k(pair_ring, minus);
      for (const SupportComponent& comp : s.supports(f12)) {
        const GroupElement& h = comp.element;
        std::vector<KClass> basis = summand_basis(s, pair_ring, comp);
        // invert eminus against the idempotent inside the summand
        std::vector<std::vector<Cyclo>> cols;
        cols.reserve(basis.size());
        for (const KClass& b : basis) cols.push_back((b * eminus).coords());
        KClass inv = KClass::zero(pair_ring);
        try {
          std::vector<Cyclo> lambda =
              solve_linear(cols, comp.idempotent.coords(), s.field());
          for (size_t b = 0; b < basis.size(); ++b) inv = inv + basis[b].scaled(lambda[b]);
        } catch (const Error& e) {
          if (e.code() != Errc::SingularRestriction) throw;
          rep.singular.push_back(h);
          continue;
        }
        rep.evaluated.push_back(h);
        KClass val = push_k(comp.idempotent * eplus * inv, target_ring);
        // compare with the h-part of the localized product in the target ring
        KClass lo = KClass::zero(target_ring);
        auto hit = lo_parts.find(h);
        if (hit != lo_parts.end()) {
          auto pit = hit->second.parts.find(target);
          if (pit != hit->second.parts.end()) lo = pit->second;
        }
        if (!(val == lo)) rep.matches = false;
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace inertia
