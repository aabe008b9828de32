#include "polycomp/ratfunc.hpp"

namespace polycomp {

RatFunc RatFunc::make(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  if (!(num.field() == den.field()))
    throw FieldMismatchError("rational function across fields");
  if (num.is_zero()) return RatFunc(std::move(num), Poly::one(den.field()));
  Poly g = Poly::gcd(num, den);
  num = Poly::div_exact(num, g);
  den = Poly::div_exact(den, g);
  FieldElem lead = den.leading();
  if (!lead.is_one()) {
    FieldElem inv = lead.inverse();
    num = num * inv;
    den = den * inv;
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::from_poly(Poly p) {
  Field f = p.field();
  return RatFunc(std::move(p), Poly::one(f));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return make(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const Poly& p) const { return make(num_ * p, den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZeroError("rational function division by zero");
  return make(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::substitute_inverse() const {
  if (is_zero()) return *this;
  // n(1/s)/d(1/s) = rev(n)(s) s^deg(d) / (rev(d)(s) s^deg(n)), each reversal
  // taken with respect to its own degree.
  int dn = num_.degree().value();
  int dd = den_.degree().value();
  Poly n = num_.reversal(dn).shifted_up(dd);
  Poly d = den_.reversal(dd).shifted_up(dn);
  return make(std::move(n), std::move(d));
}

int RatFunc::cmp(const RatFunc& o) const {
  int c = num_.cmp(o.num_);
  if (c != 0) return c;
  return den_.cmp(o.den_);
}

std::string RatFunc::to_display(char var) const {
  if (is_polynomial()) return num_.to_display(var);
  return "(" + num_.to_display(var) + ")/(" + den_.to_display(var) + ")";
}

}  // namespace polycomp
