#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace polycomp {

// Error taxonomy. ValidationError covers malformed user-facing data
// (documents, prescribed targets); InternalError covers invariant breaches
// inside the extractors, which are bugs and must surface.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatchError : Error {
  using Error::Error;
};
struct DivisionByZeroError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Coefficient field descriptor: the rationals, or a prime field GF(p) with
// p < 2^16 so residue arithmetic stays in machine words.
class Field {
 public:
  Field() = default;  // rationals

  static Field rationals() { return Field{}; }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t modulus() const;

  bool operator==(const Field&) const = default;

  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;  // 0 encodes the rationals
};

// Immutable exact scalar: an arbitrary-precision rational in lowest terms
// with positive denominator, or a residue in [0, p).
class FieldElem {
 public:
  FieldElem() = default;  // rational zero

  static FieldElem zero(const Field& f);
  static FieldElem one(const Field& f);
  static FieldElem from_int(const Field& f, long long v);
  static FieldElem from_mpq(mpq_class q);
  // Accepts "p", "-p", "p/q" for rationals; a decimal residue for GF(p).
  static FieldElem parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem inverse() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Total order used only for canonical serialization / dedup.
  int cmp(const FieldElem& o) const;

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

  std::string to_string() const;

 private:
  void require_same_field(const FieldElem& o) const;

  Field field_;
  mpq_class rat_;          // active iff field_.is_rational()
  std::uint64_t res_ = 0;  // active otherwise
};

}  // namespace polycomp
