#include "inertia/chern.hpp"

#include <cassert>

#include "inertia/errors.hpp"

namespace inertia {

Series todd_series(const FieldPtr& f, long order, long m) {
  // Td(c) = c / (1 - e^{-c}) = 1/u with u_k = (-m)^k / (k+1)!
  Series u = series_zero(f, order);
  Rat term(1);
  for (long k = 0; k < order; ++k) {
    u.c[k] = Cyclo::from_rat(f, term);
    term *= Rat(-m);
    term /= (k + 2);
  }
  Series td = series_zero(f, order);
  td.c[0] = Cyclo::one(f);
  for (long k = 1; k < order; ++k) {
    Cyclo acc = Cyclo::zero(f);
    for (long j = 1; j <= k; ++j) acc += u.c[j] * td.c[k - j];
    td.c[k] = -acc;
  }
  return td;
}

Series todd_twist(const Stack& s, const VirtualBundle& sv, long order) {
  Series acc = series_const(s.field(), order, Cyclo::one(s.field()));
  for (const auto& [w, mult] : sv.terms) {
    if (w.torus == 0) continue;  // Td of a torsion character is 1
    Series factor = series_pow(todd_series(s.field(), order, w.torus), Rat(-mult));
    acc = series_mul(acc, factor);
  }
  return acc;
}

ChowClass chern_k(const KClass& x) {
  assert(x.valid());
  const KRingPtr& r = x.ring();
  const Stack& s = *r->stack;
  ChowRingPtr target = s.chow_ring(r->fixed);
  if (r->finite_rep) {
    long pos = r->support_pos(s.identity());
    assert(pos >= 0);
    return ChowClass::from_series(target,
                                  series_const(s.field(), target->trunc, x.values()[pos]));
  }
  // x^b chi^d maps to e^{d t}; summing group-algebra coefficients is the
  // evaluation at the identity.  This is well defined on the quotient: the
  // modulus maps to prod_{j in fixed} (e^{m_j t} - 1), which vanishes mod
  // t^{|fixed|}, the truncation order of the target.
  Series acc = series_zero(s.field(), target->trunc);
  for (long d = 0; d < r->degree(); ++d) {
    Cyclo aug = Cyclo::zero(s.field());
    for (const Cyclo& c : x.poly()[d]) aug += c;
    if (aug.is_zero()) continue;
    Series e = series_exp_linear(s.field(), target->trunc, Cyclo::from_rat(s.field(), Rat(d)));
    acc = series_add(acc, series_scale(aug, e));
  }
  return ChowClass::from_series(target, acc);
}

InertiaChowClass inertial_chern(const Stack& s, const InertialPair& p, const InertiaKClass& x) {
  if (x.stack != &s) fail(Errc::StackMismatch, "Chern argument lives on a different stack");
  InertiaChowClass out = InertiaChowClass::zero(s);
  for (const auto& [sec, c] : x.parts) {
    ChowClass ch = chern_k(c);
    Series twist = todd_twist(s, s_class(s, p, s.sector(sec).element), ch.ring()->trunc);
    out.add_part(sec, ChowClass::from_series(ch.ring(), series_mul(ch.series(), twist)));
  }
  return out;
}

std::map<int, Cyclo> inertial_rank(const Stack& s, const InertialPair& p,
                                   const InertiaKClass& x) {
  std::map<int, Cyclo> out;
  InertiaChowClass ic = inertial_chern(s, p, x);
  for (const auto& [sec, c] : ic.parts) {
    if (s_age(s, p, s.sector(sec).element) == 0)
      out.emplace(sec, c.series().c[0]);
    else
      out.emplace(sec, Cyclo::zero(s.field()));
  }
  return out;
}

}  // namespace inertia
