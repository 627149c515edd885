#include "inertia/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

// --- integer polynomial helpers used only to build Phi_N ---

using ZPoly = std::vector<Int>;  // ascending coefficients, no trailing zeros

void zstrip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division, caller guarantees divisibility and monic-ish divisor use
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  assert(!den.empty());
  ZPoly q;
  if (num.size() < den.size()) {
    zstrip(num);
    assert(num.empty());
    return q;
  }
  q.assign(num.size() - den.size() + 1, Int(0));
  for (long i = long(q.size()) - 1; i >= 0; --i) {
    Int c = num[i + den.size() - 1] / den.back();
    assert(c * den.back() == num[i + den.size() - 1]);
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  zstrip(num);
  assert(num.empty());
  return q;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
const ZPoly& cyclotomic_zpoly(long n) {
  static std::map<long, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = zdiv_exact(std::move(p), cyclotomic_zpoly(d));
  return cache.emplace(n, std::move(p)).first->second;
}

// --- rational polynomial helpers for field arithmetic ---

using QPoly = std::vector<Rat>;

long qdeg(const QPoly& p) {
  for (long i = long(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// remainder of a by monic b (in place on a copy)
QPoly qmod_monic(QPoly a, const QPoly& b) {
  long db = qdeg(b);
  assert(db >= 0 && b[db] == 1);
  for (long i = qdeg(a); i >= db; i = qdeg(a)) {
    Rat c = a[i];
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    a[i] = 0;
  }
  a.resize(db);
  return a;
}

}  // namespace

CyclotomicField::CyclotomicField(long n) : n_(n) {
  assert(n >= 1);
  const ZPoly& phi = cyclotomic_zpoly(n);
  degree_ = long(phi.size()) - 1;
  minpoly_.reserve(phi.size());
  for (const Int& c : phi) minpoly_.emplace_back(c);
  long count = std::max(n, 2 * degree_ - 1);
  powers_.reserve(count);
  std::vector<Rat> cur(degree_, Rat(0));
  cur[0] = 1;
  for (long k = 0; k < count; ++k) {
    powers_.push_back(cur);
    // multiply by x, reduce with x^deg = -(minpoly tail)
    Rat lead = cur[degree_ - 1];
    for (long i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (lead != 0)
      for (long i = 0; i < degree_; ++i) cur[i] -= lead * minpoly_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(long conductor) {
  static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  if (conductor < 1) fail(Errc::ValidationError, "conductor must be >= 1");
  auto f = std::shared_ptr<const CyclotomicField>(new CyclotomicField(conductor));
  cache.emplace(conductor, f);
  return f;
}

const std::vector<Rat>& CyclotomicField::zeta_power_rep(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  return powers_[k];
}

Cyclo Cyclo::zero(const FieldPtr& f) { return Cyclo(f, std::vector<Rat>(f->degree(), Rat(0))); }

Cyclo Cyclo::one(const FieldPtr& f) { return from_rat(f, Rat(1)); }

Cyclo Cyclo::from_rat(const FieldPtr& f, const Rat& q) {
  std::vector<Rat> c(f->degree(), Rat(0));
  c[0] = q;
  return Cyclo(f, std::move(c));
}

Cyclo Cyclo::zeta_pow(const FieldPtr& f, long k) { return Cyclo(f, f->zeta_power_rep(k)); }

Cyclo Cyclo::root_of_unity(const FieldPtr& f, const Rat& q) {
  Rat k = q * f->conductor();
  if (!is_integer(k))
    fail(Errc::ConductorTooSmall,
         "root of unity e^(2*pi*i*" + rat_str(q) + ") is not in Q(zeta_" +
             std::to_string(f->conductor()) + ")");
  return zeta_pow(f, to_long(k.get_num()));
}

void Cyclo::check_same_field(const Cyclo& o) const {
  assert(valid() && o.valid());
  if (field_ != o.field_)
    fail(Errc::RingMismatch, "cyclotomic operands live in different fields");
}

bool Cyclo::is_zero() const {
  assert(valid());
  for (const Rat& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  assert(valid());
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::as_rat() const {
  assert(is_rational());
  return c_[0];
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  check_same_field(o);
  std::vector<Rat> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Cyclo(field_, std::move(r));
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  check_same_field(o);
  std::vector<Rat> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Cyclo(field_, std::move(r));
}

Cyclo Cyclo::operator-() const {
  assert(valid());
  std::vector<Rat> r(c_);
  for (Rat& q : r) q = -q;
  return Cyclo(field_, std::move(r));
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_same_field(o);
  long d = field_->degree();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (long i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> r(prod.begin(), prod.begin() + d);
  for (long k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const std::vector<Rat>& rep = field_->zeta_power_rep(k);
    for (long i = 0; i < d; ++i) r[i] += prod[k] * rep[i];
  }
  return Cyclo(field_, std::move(r));
}

Cyclo Cyclo::inverse() const {
  assert(valid());
  if (is_zero()) fail(Errc::ZeroInversion, "inverse of zero in Q(zeta)");
  // extended Euclid in Q[x]: u*this + v*Phi = gcd (a nonzero constant)
  QPoly r0(c_);
  QPoly r1 = field_->minimal_polynomial();
  QPoly s0(field_->degree() + 1, Rat(0)), s1(field_->degree() + 1, Rat(0));
  s0[0] = 1;
  while (qdeg(r1) >= 0) {
    long d0 = qdeg(r0), d1 = qdeg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    Rat c = r0[d0] / r1[d1];
    long shift = d0 - d1;
    for (long j = 0; j <= d1; ++j) r0[j + shift] -= c * r1[j];
    r0[d0] = 0;
    for (long j = 0; j + shift < long(s0.size()); ++j)
      if (j <= qdeg(s1)) s0[j + shift] -= c * s1[j];
  }
  long d = qdeg(r0);
  assert(d == 0);  // minpoly is irreducible, nonzero element is coprime to it
  Rat g = r0[0];
  QPoly u = qmod_monic(std::move(s0), field_->minimal_polynomial());
  std::vector<Rat> res(field_->degree(), Rat(0));
  for (long i = 0; i <= qdeg(u); ++i) res[i] = u[i] / g;
  return Cyclo(field_, std::move(res));
}

bool Cyclo::operator==(const Cyclo& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

std::string Cyclo::str() const {
  assert(valid());
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    bool neg = a < 0;
    Rat mag = neg ? Rat(-a) : a;
    std::string coeff = rat_str(mag);
    std::string term;
    if (k == 0) {
      term = coeff;
    } else {
      term = (mag == 1) ? "" : coeff + "*";
      term += "z";
      if (k > 1) term += "^" + std::to_string(k);
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

Cyclo operator*(const Rat& q, const Cyclo& x) { return Cyclo::from_rat(x.field(), q) * x; }

}  // namespace inertia
