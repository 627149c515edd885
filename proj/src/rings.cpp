#include "inertia/rings.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

// ---------------------------------------------------------------- GroupAlgebra

GAElem GroupAlgebra::zero() const {
  return GAElem(size(), Cyclo::zero(stack_->field()));
}

GAElem GroupAlgebra::one() const {
  GAElem a = zero();
  a[0] = Cyclo::one(stack_->field());
  return a;
}

GAElem GroupAlgebra::monomial(const std::vector<long>& exponents, const Cyclo& coeff) const {
  GAElem a = zero();
  a[stack_->lattice().index(exponents)] = coeff;
  return a;
}

GAElem GroupAlgebra::add(const GAElem& a, const GAElem& b) const {
  GAElem r = a;
  for (long i = 0; i < size(); ++i) r[i] += b[i];
  return r;
}

GAElem GroupAlgebra::sub(const GAElem& a, const GAElem& b) const {
  GAElem r = a;
  for (long i = 0; i < size(); ++i) r[i] -= b[i];
  return r;
}

GAElem GroupAlgebra::mul(const GAElem& a, const GAElem& b) const {
  GAElem r = zero();
  const FiniteLattice& lat = stack_->lattice();
  for (long i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j < size(); ++j) {
      if (b[j].is_zero()) continue;
      long k = lat.add(i, j);
      r[k] += a[i] * b[j];
    }
  }
  return r;
}

GAElem GroupAlgebra::neg(const GAElem& a) const {
  GAElem r = a;
  for (Cyclo& c : r) c = -c;
  return r;
}

GAElem GroupAlgebra::scale(const Cyclo& c, const GAElem& a) const {
  GAElem r = a;
  for (Cyclo& x : r) x *= c;
  return r;
}

bool GroupAlgebra::is_zero(const GAElem& a) const {
  for (const Cyclo& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Cyclo GroupAlgebra::eval(const GAElem& a, const GroupElement& f) const {
  const FiniteLattice& lat = stack_->lattice();
  Cyclo r = Cyclo::zero(stack_->field());
  for (long i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    std::vector<long> exps = lat.residues(i);
    Rat ang(0);
    for (size_t k = 0; k < exps.size(); ++k)
      ang += Rat(exps[k] * f.finite[k], lat.orders[k]);
    r += a[i] * Cyclo::root_of_unity(stack_->field(), frac_part(ang));
  }
  return r;
}

GAElem GroupAlgebra::monomial_inverse(const GAElem& a) const {
  long found = -1;
  for (long i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    assert(found < 0 && "monomial_inverse needs a one-term element");
    found = i;
  }
  assert(found >= 0);
  GAElem r = zero();
  r[stack_->lattice().negate(found)] = a[found].inverse();
  return r;
}

GAElem GroupAlgebra::fourier_idempotent(const GroupElement& f) const {
  const FiniteLattice& lat = stack_->lattice();
  GAElem r = zero();
  Cyclo inv_order = Cyclo::from_rat(stack_->field(), Rat(1, lat.size));
  for (long i = 0; i < size(); ++i) {
    std::vector<long> exps = lat.residues(i);
    Rat ang(0);
    for (size_t k = 0; k < exps.size(); ++k)
      ang += Rat(exps[k] * f.finite[k], lat.orders[k]);
    r[i] = Cyclo::root_of_unity(stack_->field(), frac_part(-ang)) * inv_order;
  }
  return r;
}

std::string GroupAlgebra::str(const GAElem& a) const {
  const FiniteLattice& lat = stack_->lattice();
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    std::vector<long> exps = lat.residues(i);
    std::string mono;
    for (size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k + 1);
      if (exps[k] > 1) mono += "^" + std::to_string(exps[k]);
    }
    const Cyclo& c = a[i];
    bool neg = false;
    std::string coeff;
    if (c.is_rational()) {
      Rat q = c.as_rat();
      neg = q < 0;
      coeff = rat_str(neg ? Rat(-q) : q);
      if (!mono.empty() && coeff == "1") coeff.clear();
    } else {
      coeff = "(" + c.str() + ")";
    }
    std::string term = coeff;
    if (!mono.empty()) {
      if (!term.empty()) term += "*";
      term += mono;
    }
    if (term.empty()) term = "1";
    if (first) {
      out << (neg ? "-" : "") << term;
      first = false;
    } else {
      out << (neg ? " - " : " + ") << term;
    }
  }
  if (first) return "0";
  return out.str();
}

bool GroupAlgebra::is_composite(const GAElem& a) const {
  // str() already parenthesises non-rational coefficients, so only a genuine
  // sum of monomials needs extra parentheses from the caller
  long nonzero = 0;
  for (long i = 0; i < size(); ++i)
    if (!a[i].is_zero()) ++nonzero;
  return nonzero > 1;
}

// ------------------------------------------------------- torus-side poly helpers

namespace {

using TPoly = std::vector<GAElem>;

void tpoly_reduce(const GroupAlgebra& ga, TPoly& p, const TPoly& modulus) {
  long dm = long(modulus.size()) - 1;
  while (long(p.size()) > dm) {
    GAElem lead = p.back();
    p.pop_back();
    if (ga.is_zero(lead)) continue;
    long shift = long(p.size()) - dm;
    for (long j = 0; j < dm; ++j)
      p[shift + j] = ga.sub(p[shift + j], ga.mul(lead, modulus[j]));
  }
}

TPoly tpoly_mul(const GroupAlgebra& ga, const TPoly& a, const TPoly& b) {
  TPoly r(a.size() + b.size() - 1, ga.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (ga.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = ga.add(r[i + j], ga.mul(a[i], b[j]));
  }
  return r;
}

void check_same_ring(const KClass& a, const KClass& b) {
  if (!a.valid() || !b.valid()) fail(Errc::RingMismatch, "operation on an empty class handle");
  if (a.ring() != b.ring()) {
    if (a.ring()->stack != b.ring()->stack)
      fail(Errc::StackMismatch, "classes live on different stacks");
    fail(Errc::RingMismatch, "classes live in rings of different fixed loci");
  }
}

std::string fixed_set_str(const std::vector<int>& fixed) {
  std::string s = "{";
  for (size_t i = 0; i < fixed.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(fixed[i] + 1);
  }
  return s + "}";
}

}  // namespace

// ----------------------------------------------------------------------- KRing

long KRing::dim() const {
  if (finite_rep) return long(support.size());
  return degree() * stack->lattice().size;
}

long KRing::support_pos(const GroupElement& h) const {
  auto it = std::lower_bound(support.begin(), support.end(), h);
  if (it == support.end() || !(*it == h)) return -1;
  return it - support.begin();
}

std::string KRing::presentation() const {
  if (finite_rep) {
    std::string s = "Fun{";
    for (size_t i = 0; i < support.size(); ++i) {
      if (i) s += ",";
      s += stack->sector_label(support[i]);
    }
    return s + "}";
  }
  // group identical modulus factors: (x^b X^m - 1)^count
  std::map<std::pair<std::vector<long>, long>, long> factors;
  for (int j : fixed) {
    const Character& w = stack->action().weights[j];
    ++factors[{w.finite, w.torus}];
  }
  std::ostringstream out;
  out << "Z[";
  for (size_t i = 0; i < stack->lattice().orders.size(); ++i) out << "x" << (i + 1) << ",";
  out << "X]/<";
  bool first = true;
  for (const auto& [bw, count] : factors) {
    if (!first) out << "*";
    first = false;
    std::string base;
    for (size_t i = 0; i < bw.first.size(); ++i) {
      if (bw.first[i] == 0) continue;
      if (!base.empty()) base += "*";
      base += "x" + std::to_string(i + 1);
      if (bw.first[i] > 1) base += "^" + std::to_string(bw.first[i]);
    }
    if (!base.empty()) base += "*";
    base += "X";
    if (bw.second > 1) base += "^" + std::to_string(bw.second);
    base += " - 1";
    if (count > 1)
      out << "(" << base << ")^" << count;
    else
      out << "(" << base << ")";
  }
  out << ">";
  return out.str();
}

// rings are built here and cached on the stack
std::shared_ptr<const KRing> Stack::k_ring(const std::vector<int>& fixed) const {
  auto it = k_cache_.find(fixed);
  if (it != k_cache_.end()) return it->second;
  assert(std::is_sorted(fixed.begin(), fixed.end()));
  assert(locus_nonempty(fixed));

  auto ring = std::make_shared<KRing>();
  ring->stack = this;
  ring->fixed = fixed;
  ring->finite_rep = (action_.group.torus_rank == 0);
  if (ring->finite_rep) {
    for (long i = 0; i < lattice_.size; ++i) {
      GroupElement h{lattice_.residues(i), Rat(0)};
      if (action_.space == SpaceKind::Point) {
        ring->support.push_back(h);
        continue;
      }
      std::vector<int> fh = fixed_set(h);
      std::vector<int> meet;
      std::set_intersection(fh.begin(), fh.end(), fixed.begin(), fixed.end(),
                            std::back_inserter(meet));
      if (!meet.empty()) ring->support.push_back(h);
    }
    std::sort(ring->support.begin(), ring->support.end());
  } else {
    GroupAlgebra ga(*this);
    TPoly m{ga.one()};
    for (int j : fixed) {
      const Character& w = action_.weights[j];
      TPoly factor(w.torus + 1, ga.zero());
      factor[0] = ga.neg(ga.one());
      factor[w.torus] = ga.monomial(w.finite, Cyclo::one(field_));
      m = tpoly_mul(ga, m, factor);
    }
    // normalise by the unit leading monomial so division is straightforward
    GAElem lead_inv = ga.monomial_inverse(m.back());
    for (GAElem& c : m) c = ga.mul(lead_inv, c);
    ring->modulus = m;
    // chi^{-1} = -c0^{-1} (M - c0)/chi, using that the constant term is a unit
    GAElem c0_inv_neg = ga.neg(ga.monomial_inverse(m[0]));
    ring->chi_inv.resize(ring->degree(), ga.zero());
    for (long i = 0; i < ring->degree(); ++i) ring->chi_inv[i] = ga.mul(c0_inv_neg, m[i + 1]);
  }
  k_cache_.emplace(fixed, ring);
  return ring;
}

std::shared_ptr<const ChowRing> Stack::chow_ring(const std::vector<int>& fixed) const {
  auto it = chow_cache_.find(fixed);
  if (it != chow_cache_.end()) return it->second;
  auto ring = std::make_shared<ChowRing>();
  ring->stack = this;
  ring->fixed = fixed;
  ring->trunc = chow_truncation(fixed);
  chow_cache_.emplace(fixed, ring);
  return ring;
}

// ---------------------------------------------------------------------- KClass

KClass KClass::zero(const KRingPtr& r) {
  KClass x;
  x.ring_ = r;
  if (r->finite_rep)
    x.values_.assign(r->support.size(), Cyclo::zero(r->stack->field()));
  else
    x.poly_.assign(r->degree(), GroupAlgebra(*r->stack).zero());
  return x;
}

KClass KClass::one(const KRingPtr& r) {
  KClass x = zero(r);
  if (r->finite_rep) {
    for (Cyclo& v : x.values_) v = Cyclo::one(r->stack->field());
  } else {
    x.poly_[0] = GroupAlgebra(*r->stack).one();
  }
  return x;
}

KClass KClass::from_poly(const KRingPtr& r, std::vector<GAElem> coeffs) {
  assert(!r->finite_rep);
  GroupAlgebra ga(*r->stack);
  tpoly_reduce(ga, coeffs, r->modulus);
  coeffs.resize(r->degree(), ga.zero());
  KClass x;
  x.ring_ = r;
  x.poly_ = std::move(coeffs);
  return x;
}

KClass KClass::from_values(const KRingPtr& r, std::vector<Cyclo> values) {
  assert(r->finite_rep && values.size() == r->support.size());
  KClass x;
  x.ring_ = r;
  x.values_ = std::move(values);
  return x;
}

KClass KClass::monomial(const KRingPtr& r, const Character& w) {
  if (r->finite_rep) {
    std::vector<Cyclo> vals;
    vals.reserve(r->support.size());
    for (const GroupElement& h : r->support) vals.push_back(r->stack->character_value(h, w));
    return from_values(r, std::move(vals));
  }
  GroupAlgebra ga(*r->stack);
  long m = w.torus;
  std::vector<GAElem> p(std::max<long>(m, 0) + 1, ga.zero());
  p[std::max<long>(m, 0)] = ga.monomial(w.finite, Cyclo::one(r->stack->field()));
  KClass x = from_poly(r, std::move(p));
  if (m < 0) {
    KClass inv = from_poly(r, r->chi_inv);
    for (long k = 0; k < -m; ++k) x = x * inv;
  }
  return x;
}

bool KClass::is_zero() const {
  assert(valid());
  if (ring_->finite_rep) {
    for (const Cyclo& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }
  GroupAlgebra ga(*ring_->stack);
  for (const GAElem& c : poly_)
    if (!ga.is_zero(c)) return false;
  return true;
}

bool KClass::operator==(const KClass& o) const {
  check_same_ring(*this, o);
  return ring_->finite_rep ? values_ == o.values_ : poly_ == o.poly_;
}

KClass KClass::operator+(const KClass& o) const {
  check_same_ring(*this, o);
  KClass r = *this;
  if (ring_->finite_rep) {
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] += o.values_[i];
  } else {
    GroupAlgebra ga(*ring_->stack);
    for (size_t i = 0; i < poly_.size(); ++i) r.poly_[i] = ga.add(r.poly_[i], o.poly_[i]);
  }
  return r;
}

KClass KClass::operator-(const KClass& o) const { return *this + (-o); }

KClass KClass::operator-() const {
  assert(valid());
  KClass r = *this;
  if (ring_->finite_rep) {
    for (Cyclo& v : r.values_) v = -v;
  } else {
    GroupAlgebra ga(*ring_->stack);
    for (GAElem& c : r.poly_) c = ga.neg(c);
  }
  return r;
}

KClass KClass::operator*(const KClass& o) const {
  check_same_ring(*this, o);
  if (ring_->finite_rep) {
    std::vector<Cyclo> vals = values_;
    for (size_t i = 0; i < vals.size(); ++i) vals[i] *= o.values_[i];
    return from_values(ring_, std::move(vals));
  }
  GroupAlgebra ga(*ring_->stack);
  return from_poly(ring_, tpoly_mul(ga, poly_, o.poly_));
}

KClass KClass::scaled(const Cyclo& c) const {
  assert(valid());
  KClass r = *this;
  if (ring_->finite_rep) {
    for (Cyclo& v : r.values_) v *= c;
  } else {
    GroupAlgebra ga(*ring_->stack);
    for (GAElem& x : r.poly_) x = ga.scale(c, x);
  }
  return r;
}

std::vector<Cyclo> KClass::coords() const {
  assert(valid());
  if (ring_->finite_rep) return values_;
  std::vector<Cyclo> out;
  out.reserve(ring_->dim());
  for (const GAElem& c : poly_)
    for (const Cyclo& v : c) out.push_back(v);
  return out;
}

std::string KClass::str() const {
  assert(valid());
  if (ring_->finite_rep) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < values_.size(); ++i) {
      if (i) out << ", ";
      out << ring_->stack->sector_label(ring_->support[i]) << ": " << values_[i].str();
    }
    out << "}";
    return out.str();
  }
  GroupAlgebra ga(*ring_->stack);
  std::ostringstream out;
  bool first = true;
  for (size_t d = 0; d < poly_.size(); ++d) {
    if (ga.is_zero(poly_[d])) continue;
    std::string coeff = ga.str(poly_[d]);
    bool neg = false;
    std::string term;
    if (ga.is_composite(poly_[d])) {
      term = "(" + coeff + ")";
      if (d > 0) term += "*";
    } else if (!coeff.empty() && coeff[0] == '-') {
      neg = true;
      term = coeff.substr(1);
    } else {
      term = coeff;
    }
    if (d > 0) {
      if (!ga.is_composite(poly_[d])) {
        if (term == "1")
          term.clear();
        else
          term += "*";
      }
      term += "X";
      if (d > 1) term += "^" + std::to_string(d);
    }
    if (first) {
      out << (neg ? "-" : "") << term;
      first = false;
    } else {
      out << (neg ? " - " : " + ") << term;
    }
  }
  if (first) return "0";
  return out.str();
}

KClass euler_k(const KRingPtr& r, const VirtualBundle& v) {
  KClass acc = KClass::one(r);
  for (const auto& [w, mult] : v.terms) {
    if (!is_integer(mult))
      fail(Errc::NonIntegralMultiplicity,
           "Euler class needs integer multiplicities, got " + rat_str(mult));
    if (mult < 0)
      fail(Errc::NegativeMultiplicity, "Euler class needs non-negative multiplicities");
    Character nw = w;
    for (long& b : nw.finite) b = -b;
    nw.torus = -nw.torus;
    KClass factor = KClass::one(r) - KClass::monomial(r, nw);
    for (Rat k(0); k < mult; ++k) acc = acc * factor;
  }
  return acc;
}

KClass restrict_k(const KClass& x, const KRingPtr& target) {
  assert(x.valid());
  const KRingPtr& src = x.ring();
  if (src->stack != target->stack) fail(Errc::StackMismatch, "restriction across stacks");
  if (!std::includes(src->fixed.begin(), src->fixed.end(), target->fixed.begin(),
                     target->fixed.end()))
    fail(Errc::NotASubset, "restriction target " + fixed_set_str(target->fixed) +
                               " is not inside " + fixed_set_str(src->fixed));
  if (src->finite_rep) {
    std::vector<Cyclo> vals;
    vals.reserve(target->support.size());
    for (const GroupElement& h : target->support) {
      long pos = src->support_pos(h);
      assert(pos >= 0);
      vals.push_back(x.values()[pos]);
    }
    return KClass::from_values(target, std::move(vals));
  }
  return KClass::from_poly(target, x.poly());
}

KClass push_k(const KClass& x, const KRingPtr& target) {
  assert(x.valid());
  const KRingPtr& src = x.ring();
  if (src->stack != target->stack) fail(Errc::StackMismatch, "pushforward across stacks");
  if (!std::includes(target->fixed.begin(), target->fixed.end(), src->fixed.begin(),
                     src->fixed.end()))
    fail(Errc::NotASubset, "pushforward source " + fixed_set_str(src->fixed) +
                               " is not inside " + fixed_set_str(target->fixed));
  VirtualBundle normal;
  for (int j : target->fixed)
    if (!std::binary_search(src->fixed.begin(), src->fixed.end(), j))
      normal.add(target->stack->action().weights[j], Rat(1));
  // Lifting the representative is well defined after multiplying by the Euler
  // class of the normal directions: any two lifts differ by the source
  // modulus, and euler * (source modulus) lies in the target modulus ideal.
  KClass lift = [&] {
    if (src->finite_rep) {
      std::vector<Cyclo> vals(target->support.size(), Cyclo::zero(target->stack->field()));
      for (size_t i = 0; i < target->support.size(); ++i) {
        long pos = src->support_pos(target->support[i]);
        if (pos >= 0) vals[i] = x.values()[pos];
      }
      return KClass::from_values(target, std::move(vals));
    }
    return KClass::from_poly(target, x.poly());
  }();
  return lift * euler_k(target, normal);
}

// -------------------------------------------------------------------- ChowRing

std::string ChowRing::presentation() const {
  return "Q[t]/<t^" + std::to_string(trunc) + ">";
}

ChowClass ChowClass::zero(const ChowRingPtr& r) {
  return from_series(r, series_zero(r->stack->field(), r->trunc));
}

ChowClass ChowClass::one(const ChowRingPtr& r) {
  return from_series(r, series_const(r->stack->field(), r->trunc, Cyclo::one(r->stack->field())));
}

ChowClass ChowClass::monomial(const ChowRingPtr& r, long k, const Cyclo& coeff) {
  return from_series(r, series_monomial(r->stack->field(), r->trunc, k, coeff));
}

ChowClass ChowClass::from_series(const ChowRingPtr& r, Series s) {
  assert(s.order() == r->trunc);
  ChowClass x;
  x.ring_ = r;
  x.s_ = std::move(s);
  return x;
}

bool ChowClass::is_zero() const { return s_.is_zero(); }

bool ChowClass::operator==(const ChowClass& o) const {
  if (ring_ != o.ring_) fail(Errc::RingMismatch, "Chow classes live in different rings");
  return s_ == o.s_;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  if (ring_ != o.ring_) fail(Errc::RingMismatch, "Chow classes live in different rings");
  return from_series(ring_, series_add(s_, o.s_));
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
  if (ring_ != o.ring_) fail(Errc::RingMismatch, "Chow classes live in different rings");
  return from_series(ring_, series_sub(s_, o.s_));
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  if (ring_ != o.ring_) fail(Errc::RingMismatch, "Chow classes live in different rings");
  return from_series(ring_, series_mul(s_, o.s_));
}

ChowClass ChowClass::scaled(const Cyclo& c) const {
  return from_series(ring_, series_scale(c, s_));
}

std::string ChowClass::str() const { return series_str(s_); }

ChowClass euler_chow(const ChowRingPtr& r, const VirtualBundle& v) {
  const FieldPtr& f = r->stack->field();
  Series acc = series_const(f, r->trunc, Cyclo::one(f));
  for (const auto& [w, mult] : v.terms) {
    if (!is_integer(mult))
      fail(Errc::NonIntegralMultiplicity,
           "Euler class needs integer multiplicities, got " + rat_str(mult));
    if (mult < 0)
      fail(Errc::NegativeMultiplicity, "Euler class needs non-negative multiplicities");
    Series factor = series_monomial(f, r->trunc, 1, Cyclo::from_rat(f, Rat(w.torus)));
    for (Rat k(0); k < mult; ++k) acc = series_mul(acc, factor);
  }
  return ChowClass::from_series(r, acc);
}

ChowClass restrict_chow(const ChowClass& x, const ChowRingPtr& target) {
  assert(x.valid());
  const ChowRingPtr& src = x.ring();
  if (src->stack != target->stack) fail(Errc::StackMismatch, "restriction across stacks");
  if (!std::includes(src->fixed.begin(), src->fixed.end(), target->fixed.begin(),
                     target->fixed.end()))
    fail(Errc::NotASubset, "restriction target is not inside the source locus");
  return ChowClass::from_series(target, series_reorder(x.series(), target->trunc));
}

ChowClass push_chow(const ChowClass& x, const ChowRingPtr& target) {
  assert(x.valid());
  const ChowRingPtr& src = x.ring();
  if (src->stack != target->stack) fail(Errc::StackMismatch, "pushforward across stacks");
  if (!std::includes(target->fixed.begin(), target->fixed.end(), src->fixed.begin(),
                     src->fixed.end()))
    fail(Errc::NotASubset, "pushforward source is not inside the target locus");
  VirtualBundle normal;
  for (int j : target->fixed)
    if (!std::binary_search(src->fixed.begin(), src->fixed.end(), j))
      normal.add(target->stack->action().weights[j], Rat(1));
  ChowClass lift = ChowClass::from_series(target, series_reorder(x.series(), target->trunc));
  return lift * euler_chow(target, normal);
}

// -------------------------------------------------------------- inertia classes

void InertiaKClass::add_part(int sector, const KClass& x) {
  if (x.is_zero()) return;
  auto it = parts.find(sector);
  if (it == parts.end()) {
    parts.emplace(sector, x);
    return;
  }
  it->second = it->second + x;
  if (it->second.is_zero()) parts.erase(it);
}

InertiaKClass InertiaKClass::operator+(const InertiaKClass& o) const {
  if (stack != o.stack) fail(Errc::StackMismatch, "sum of classes on different stacks");
  InertiaKClass r = *this;
  for (const auto& [s, x] : o.parts) r.add_part(s, x);
  return r;
}

bool InertiaKClass::operator==(const InertiaKClass& o) const {
  if (stack != o.stack) fail(Errc::StackMismatch, "comparison of classes on different stacks");
  return parts == o.parts;
}

InertiaKClass InertiaKClass::unit(const Stack& s) {
  int id = s.sector_index(s.identity());
  assert(id >= 0);
  return sector_unit(s, id);
}

InertiaKClass InertiaKClass::sector_unit(const Stack& s, int sector) {
  InertiaKClass r = zero(s);
  r.add_part(sector, KClass::one(s.k_ring(s.sector(sector).fixed)));
  return r;
}

void InertiaChowClass::add_part(int sector, const ChowClass& x) {
  if (x.is_zero()) return;
  auto it = parts.find(sector);
  if (it == parts.end()) {
    parts.emplace(sector, x);
    return;
  }
  it->second = it->second + x;
  if (it->second.is_zero()) parts.erase(it);
}

InertiaChowClass InertiaChowClass::operator+(const InertiaChowClass& o) const {
  if (stack != o.stack) fail(Errc::StackMismatch, "sum of classes on different stacks");
  InertiaChowClass r = *this;
  for (const auto& [s, x] : o.parts) r.add_part(s, x);
  return r;
}

bool InertiaChowClass::operator==(const InertiaChowClass& o) const {
  if (stack != o.stack) fail(Errc::StackMismatch, "comparison of classes on different stacks");
  return parts == o.parts;
}

InertiaChowClass InertiaChowClass::unit(const Stack& s) {
  int id = s.sector_index(s.identity());
  assert(id >= 0);
  InertiaChowClass r = zero(s);
  r.add_part(id, ChowClass::one(s.chow_ring(s.sector(id).fixed)));
  return r;
}

std::vector<InertiaKClass> k_basis(const Stack& s) {
  std::vector<InertiaKClass> out;
  GroupAlgebra ga(s);
  for (size_t i = 0; i < s.sectors().size(); ++i) {
    KRingPtr r = s.k_ring(s.sector(int(i)).fixed);
    if (r->finite_rep) {
      for (size_t p = 0; p < r->support.size(); ++p) {
        std::vector<Cyclo> vals(r->support.size(), Cyclo::zero(s.field()));
        vals[p] = Cyclo::one(s.field());
        InertiaKClass c = InertiaKClass::zero(s);
        c.add_part(int(i), KClass::from_values(r, std::move(vals)));
        out.push_back(std::move(c));
      }
    } else {
      for (long d = 0; d < r->degree(); ++d)
        for (long b = 0; b < s.lattice().size; ++b) {
          std::vector<GAElem> poly(d + 1, ga.zero());
          poly[d] = ga.monomial(s.lattice().residues(b), Cyclo::one(s.field()));
          InertiaKClass c = InertiaKClass::zero(s);
          c.add_part(int(i), KClass::from_poly(r, std::move(poly)));
          out.push_back(std::move(c));
        }
    }
  }
  return out;
}

std::vector<InertiaChowClass> chow_basis(const Stack& s) {
  std::vector<InertiaChowClass> out;
  for (size_t i = 0; i < s.sectors().size(); ++i) {
    ChowRingPtr r = s.chow_ring(s.sector(int(i)).fixed);
    for (long k = 0; k < r->trunc; ++k) {
      InertiaChowClass c = InertiaChowClass::zero(s);
      c.add_part(int(i), ChowClass::monomial(r, k, Cyclo::one(s.field())));
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace inertia
