#include "inertia/series.hpp"

#include <cassert>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

bool Series::is_zero() const {
  for (const Cyclo& x : c)
    if (!x.is_zero()) return false;
  return true;
}

bool Series::operator==(const Series& o) const {
  if (order() != o.order()) return false;
  for (long i = 0; i < order(); ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

Series series_zero(const FieldPtr& f, long order) {
  assert(order >= 1);
  return Series{std::vector<Cyclo>(order, Cyclo::zero(f))};
}

Series series_const(const FieldPtr& f, long order, const Cyclo& value) {
  Series s = series_zero(f, order);
  s.c[0] = value;
  return s;
}

Series series_monomial(const FieldPtr& f, long order, long k, const Cyclo& coeff) {
  Series s = series_zero(f, order);
  if (k < order) s.c[k] = coeff;
  return s;
}

static void check_compatible(const Series& a, const Series& b) {
  if (a.order() != b.order() || a.field() != b.field())
    fail(Errc::RingMismatch, "series have different truncation order or coefficient field");
}

Series series_add(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series r = a;
  for (long i = 0; i < r.order(); ++i) r.c[i] += b.c[i];
  return r;
}

Series series_sub(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series r = a;
  for (long i = 0; i < r.order(); ++i) r.c[i] -= b.c[i];
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series r = series_zero(a.field(), a.order());
  for (long i = 0; i < a.order(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (long j = 0; i + j < b.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

Series series_scale(const Cyclo& c, const Series& a) {
  Series r = a;
  for (Cyclo& x : r.c) x *= c;
  return r;
}

Series series_neg(const Series& a) {
  Series r = a;
  for (Cyclo& x : r.c) x = -x;
  return r;
}

Series series_reorder(const Series& a, long order) {
  assert(order >= 1);
  Series r = series_zero(a.field(), order);
  for (long i = 0; i < std::min(order, a.order()); ++i) r.c[i] = a.c[i];
  return r;
}

Series series_exp_linear(const FieldPtr& f, long order, const Cyclo& d) {
  Series r = series_zero(f, order);
  Cyclo term = Cyclo::one(f);
  Rat fact(1);
  for (long k = 0; k < order; ++k) {
    if (k > 0) {
      term *= d;
      fact /= k;
    }
    r.c[k] = Cyclo::from_rat(f, fact) * term;
  }
  return r;
}

Series series_pow(const Series& s, const Rat& e) {
  const FieldPtr& f = s.field();
  if (s.c[0] != Cyclo::one(f))
    fail(Errc::NonUnitConstantTerm, "series power needs constant term 1, got " + s.c[0].str());
  long n = s.order();
  // u = s - 1 is nilpotent: log/exp are finite sums
  Series u = series_sub(s, series_const(f, n, Cyclo::one(f)));
  Series logs = series_zero(f, n);
  Series upow = series_const(f, n, Cyclo::one(f));
  Rat sign(1);
  for (long k = 1; k < n; ++k) {
    upow = series_mul(upow, u);
    if (upow.is_zero()) break;
    logs = series_add(logs, series_scale(Cyclo::from_rat(f, sign / k), upow));
    sign = -sign;
  }
  Series v = series_scale(Cyclo::from_rat(f, e), logs);
  Series r = series_const(f, n, Cyclo::one(f));
  Series vpow = series_const(f, n, Cyclo::one(f));
  Rat fact(1);
  for (long k = 1; k < n; ++k) {
    vpow = series_mul(vpow, v);
    if (vpow.is_zero()) break;
    fact /= k;
    r = series_add(r, series_scale(Cyclo::from_rat(f, fact), vpow));
  }
  return r;
}

std::string series_str(const Series& s, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (long k = 0; k < s.order(); ++k) {
    if (s.c[k].is_zero()) continue;
    const Cyclo& a = s.c[k];
    std::string term;
    bool neg = false;
    if (a.is_rational()) {
      Rat q = a.as_rat();
      neg = q < 0;
      Rat mag = neg ? Rat(-q) : q;
      if (k == 0)
        term = rat_str(mag);
      else
        term = ((mag == 1) ? std::string() : rat_str(mag) + "*") + var +
               (k > 1 ? "^" + std::to_string(k) : "");
    } else {
      term = "(" + a.str() + ")";
      if (k > 0) term += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
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

}  // namespace inertia
