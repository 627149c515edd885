#include "inertia/polynomial.hpp"

#include <cassert>

#include "inertia/errors.hpp"

namespace inertia {

long cpoly_deg(const CPoly& p) {
  for (long i = long(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

void cpoly_strip(CPoly& p) { p.resize(cpoly_deg(p) + 1); }

CPoly cpoly_add(const CPoly& a, const CPoly& b) {
  CPoly r = a.size() >= b.size() ? a : b;
  const CPoly& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  cpoly_strip(r);
  return r;
}

CPoly cpoly_sub(const CPoly& a, const CPoly& b) {
  CPoly nb = b;
  for (Cyclo& c : nb) c = -c;
  return cpoly_add(a, nb);
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1, Cyclo::zero(a[0].field()));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  cpoly_strip(r);
  return r;
}

CPoly cpoly_scale(const Cyclo& c, const CPoly& a) {
  CPoly r = a;
  for (Cyclo& x : r) x *= c;
  cpoly_strip(r);
  return r;
}

Cyclo cpoly_eval(const CPoly& p, const Cyclo& x) {
  Cyclo acc = Cyclo::zero(x.field());
  for (long i = long(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

std::pair<CPoly, CPoly> cpoly_divmod(const CPoly& a, const CPoly& b) {
  long db = cpoly_deg(b);
  assert(db >= 0);
  CPoly rem = a;
  cpoly_strip(rem);
  long da = cpoly_deg(rem);
  if (da < db) return {CPoly{}, rem};
  Cyclo lead_inv = b[db].inverse();
  CPoly quot(da - db + 1, Cyclo::zero(b[db].field()));
  for (long i = da; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Cyclo c = rem[i] * lead_inv;
    quot[i - db] = c;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  cpoly_strip(rem);
  return {quot, rem};
}

CPoly cpoly_mod(const CPoly& a, const CPoly& b) { return cpoly_divmod(a, b).second; }

CPoly cpoly_taylor(const CPoly& p, const Cyclo& r) {
  // repeated synthetic division by (x - r); remainders are the u-coefficients
  CPoly rest = p;
  cpoly_strip(rest);
  CPoly out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    CPoly quot(rest.size() - 1, Cyclo::zero(r.field()));
    Cyclo acc = Cyclo::zero(r.field());
    for (long i = long(rest.size()) - 1; i >= 1; --i) {
      acc = rest[i] + acc * r;
      quot[i - 1] = acc;
    }
    out.push_back(rest[0] + acc * r);
    rest = std::move(quot);
  }
  return out;
}

std::vector<CrtComponent> crt_idempotents(const CPoly& modulus) {
  CPoly m = modulus;
  cpoly_strip(m);
  long deg = cpoly_deg(m);
  if (deg < 1) fail(Errc::IncompleteSplitting, "modulus must have positive degree");
  FieldPtr field = m[0].field();
  m = cpoly_scale(m.back().inverse(), m);  // make monic

  struct Root {
    long k;
    Cyclo value;
    long mult;
  };
  std::vector<Root> roots;
  CPoly rest = m;
  for (long k = 0; k < field->conductor() && cpoly_deg(rest) > 0; ++k) {
    Cyclo r = Cyclo::zeta_pow(field, k);
    long mult = 0;
    while (cpoly_deg(rest) > 0 && cpoly_eval(rest, r).is_zero()) {
      // synthetic division by (x - r)
      CPoly quot(rest.size() - 1, Cyclo::zero(field));
      Cyclo acc = Cyclo::zero(field);
      for (long i = long(rest.size()) - 1; i >= 1; --i) {
        acc = rest[i] + acc * r;
        quot[i - 1] = acc;
      }
      rest = std::move(quot);
      ++mult;
    }
    if (mult > 0) roots.push_back({k, r, mult});
  }
  if (cpoly_deg(rest) > 0)
    fail(Errc::IncompleteSplitting,
         "modulus has a factor with no root among the N-th roots of unity");

  std::vector<CrtComponent> out;
  out.reserve(roots.size());
  for (const Root& ri : roots) {
    // cofactor A = m / (x - root)^mult
    CPoly lin{-ri.value, Cyclo::one(field)};
    CPoly cof = m;
    for (long t = 0; t < ri.mult; ++t) {
      auto [q, rem] = cpoly_divmod(cof, lin);
      assert(cpoly_deg(rem) < 0);
      cof = std::move(q);
    }
    // invert A as a power series in u = x - root, mod u^mult
    CPoly a = cpoly_taylor(cof, ri.value);
    assert(!a.empty() && !a[0].is_zero());
    std::vector<Cyclo> b(ri.mult, Cyclo::zero(field));
    Cyclo a0inv = a[0].inverse();
    b[0] = a0inv;
    for (long k = 1; k < ri.mult; ++k) {
      Cyclo s = Cyclo::zero(field);
      for (long j = 1; j <= k; ++j) {
        if (j < long(a.size())) s += a[j] * b[k - j];
      }
      b[k] = -(s * a0inv);
    }
    // B(x) = sum b_k (x - root)^k, idempotent = A*B mod m
    CPoly bpoly{b[0]};
    CPoly upow{Cyclo::one(field)};
    for (long k = 1; k < ri.mult; ++k) {
      upow = cpoly_mul(upow, lin);
      bpoly = cpoly_add(bpoly, cpoly_scale(b[k], upow));
    }
    CPoly idem = cpoly_mod(cpoly_mul(cof, bpoly), m);
    out.push_back({ri.value, ri.k, ri.mult, std::move(idem)});
  }
  return out;
}

}  // namespace inertia
