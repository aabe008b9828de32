#pragma once

#include <string>

#include "polycomp/poly.hpp"

namespace polycomp {

// Reduced rational function: gcd(num, den) = 1, den monic and nonzero.
// Zero is represented as 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::one(Field::rationals())) {}  // zero over Q

  static RatFunc make(Poly num, Poly den);
  static RatFunc from_poly(Poly p);
  static RatFunc zero(const Field& f) { return from_poly(Poly::zero(f)); }
  static RatFunc one(const Field& f) { return from_poly(Poly::one(f)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator*(const Poly& p) const;
  RatFunc operator/(const RatFunc& o) const;

  // f(s) -> f(1/s), re-reduced.
  RatFunc substitute_inverse() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  int cmp(const RatFunc& o) const;

  std::string to_display(char var = 's') const;

 private:
  Poly num_;
  Poly den_;

  RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
};

}  // namespace polycomp
