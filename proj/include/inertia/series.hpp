#pragma once

// Truncated power series over Q(zeta_N): arithmetic mod t^order with exact
// coefficients, plus powers with arbitrary rational exponents (via exp/log,
// which are polynomial operations on a nilpotent variable).

#include <string>
#include <vector>

#include "inertia/cyclotomic.hpp"

namespace inertia {

struct Series {
  std::vector<Cyclo> c;  // size is the truncation order; represents sum c[k] t^k mod t^order

  long order() const { return long(c.size()); }
  const FieldPtr& field() const { return c.at(0).field(); }
  bool is_zero() const;
  bool operator==(const Series& o) const;
};

Series series_zero(const FieldPtr& f, long order);
Series series_const(const FieldPtr& f, long order, const Cyclo& value);
Series series_monomial(const FieldPtr& f, long order, long k, const Cyclo& coeff);
Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_scale(const Cyclo& c, const Series& a);
Series series_neg(const Series& a);
// change truncation order: drops coefficients or pads with zeros
Series series_reorder(const Series& a, long order);
// exp(d*t) mod t^order
Series series_exp_linear(const FieldPtr& f, long order, const Cyclo& d);
// s^e for rational e; requires constant term 1 (NonUnitConstantTerm otherwise)
Series series_pow(const Series& s, const Rat& e);
std::string series_str(const Series& s, const std::string& var = "t");

}  // namespace inertia
