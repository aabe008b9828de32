#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polycomp/field.hpp"

namespace polycomp {

// Degree of a univariate polynomial. The zero polynomial gets a dedicated
// minus-infinity marker; it never leaks into data as an ordinary integer.
class Degree {
 public:
  static Degree minus_infinity() { return Degree{}; }
  static Degree of(int d) {
    Degree g;
    g.finite_ = true;
    g.value_ = d;
    return g;
  }

  bool is_finite() const { return finite_; }
  int value() const {
    if (!finite_) throw InternalError("degree of the zero polynomial used as an integer");
    return value_;
  }
  int value_or(int fallback) const { return finite_ ? value_ : fallback; }

  bool operator==(const Degree&) const = default;
  bool operator<(const Degree& o) const {
    if (!finite_) return o.finite_;
    if (!o.finite_) return false;
    return value_ < o.value_;
  }
  bool operator<=(const Degree& o) const { return *this < o || *this == o; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  int value_ = 0;
};

// Dense univariate polynomial over an exact field; coefficients stored low
// degree first with a nonzero leading coefficient (zero = empty list).
class Poly {
 public:
  Poly() = default;  // zero over Q

  static Poly zero(const Field& f) { return Poly(f, {}); }
  static Poly one(const Field& f) { return constant(FieldElem::one(f)); }
  static Poly constant(FieldElem c);
  static Poly variable(const Field& f) { return monomial(f, 1); }
  static Poly monomial(const Field& f, int degree, FieldElem lead);
  static Poly monomial(const Field& f, int degree) {
    return monomial(f, degree, FieldElem::one(f));
  }
  static Poly from_coeffs(const Field& f, std::vector<FieldElem> coeffs);
  // Test/CLI convenience: integer coefficients, low degree first.
  static Poly from_ints(const Field& f, std::initializer_list<long long> coeffs);
  static Poly from_ints(const Field& f, const std::vector<long long>& coeffs);

  const Field& field() const { return field_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const;

  // Coefficient of s^k; zero beyond the stored range.
  FieldElem coeff(int k) const;
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& c) const;

  FieldElem leading() const;  // zero element for the zero polynomial
  Poly monic() const;         // zero stays zero

  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  static Poly div_exact(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);
  static Poly lcm(const Poly& a, const Poly& b);
  // a | b, with the usual convention that everything divides zero.
  static bool divides(const Poly& a, const Poly& b);

  FieldElem eval(const FieldElem& x) const;
  // Multiplicity of the root 0, i.e. the s-adic valuation. Nonzero input only.
  int valuation_at_zero() const;
  Poly shifted_up(int k) const;  // multiply by s^k
  // Coefficient reversal with respect to a grade d >= deg.
  Poly reversal(int grade) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  int cmp(const Poly& o) const;  // canonical order for dedup
  bool operator<(const Poly& o) const { return cmp(o) < 0; }

  std::string to_display(char var = 's') const;

 private:
  Poly(Field f, std::vector<FieldElem> coeffs) : field_(f), coeffs_(std::move(coeffs)) {}
  void trim();

  Field field_;
  std::vector<FieldElem> coeffs_;
};

}  // namespace polycomp
