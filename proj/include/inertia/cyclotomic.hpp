#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).  Elements are stored in
// the power basis 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic
// polynomial; all coefficients are exact rationals.

#include <memory>
#include <string>
#include <vector>

#include "inertia/rational.hpp"

namespace inertia {

class CyclotomicField {
 public:
  // flyweight: one shared instance per conductor
  static std::shared_ptr<const CyclotomicField> get(long conductor);

  long conductor() const { return n_; }
  long degree() const { return degree_; }
  const std::vector<Rat>& minimal_polynomial() const { return minpoly_; }
  // z^k reduced mod Phi_N, for any k >= 0 (k is taken mod N first)
  const std::vector<Rat>& zeta_power_rep(long k) const;

 private:
  explicit CyclotomicField(long n);
  long n_;
  long degree_;
  std::vector<Rat> minpoly_;               // monic, size degree_+1
  std::vector<std::vector<Rat>> powers_;   // x^k mod Phi for k < max(N, 2*degree-1)
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

class Cyclo {
 public:
  Cyclo() = default;  // invalid placeholder; any arithmetic on it asserts
  static Cyclo zero(const FieldPtr& f);
  static Cyclo one(const FieldPtr& f);
  static Cyclo from_rat(const FieldPtr& f, const Rat& q);
  static Cyclo zeta_pow(const FieldPtr& f, long k);
  // e^{2*pi*i*q}; requires q*N integral, else ConductorTooSmall
  static Cyclo root_of_unity(const FieldPtr& f, const Rat& q);

  bool valid() const { return field_ != nullptr; }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat as_rat() const;  // requires is_rational()

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo inverse() const;  // ZeroInversion on zero
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  std::string str() const;  // polynomial in z, ascending powers

 private:
  Cyclo(FieldPtr f, std::vector<Rat> c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same_field(const Cyclo& o) const;

  FieldPtr field_;
  std::vector<Rat> c_;  // size field_->degree()
};

Cyclo operator*(const Rat& q, const Cyclo& x);

}  // namespace inertia
