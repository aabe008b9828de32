#include "polycomp/field.hpp"

namespace polycomp {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (p >= (1u << 16)) throw ValidationError("GF modulus must be < 2^16, got " + std::to_string(p));
  if (!is_prime(p)) throw ValidationError("GF modulus must be prime, got " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

std::uint32_t Field::modulus() const {
  if (is_rational()) throw InternalError("modulus() called on the rational field");
  return p_;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldElem FieldElem::zero(const Field& f) {
  FieldElem e;
  e.field_ = f;
  return e;
}

FieldElem FieldElem::one(const Field& f) { return from_int(f, 1); }

FieldElem FieldElem::from_int(const Field& f, long long v) {
  FieldElem e;
  e.field_ = f;
  if (f.is_rational()) {
    e.rat_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = static_cast<long long>(f.modulus());
    long long r = v % m;
    if (r < 0) r += m;
    e.res_ = static_cast<std::uint64_t>(r);
  }
  return e;
}

FieldElem FieldElem::from_mpq(mpq_class q) {
  q.canonicalize();
  FieldElem e;
  e.rat_ = std::move(q);
  return e;
}

FieldElem FieldElem::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw ParseError("empty coefficient");
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational coefficient '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in coefficient '" + text + "'");
    q.canonicalize();
    FieldElem e;
    e.field_ = f;
    e.rat_ = std::move(q);
    return e;
  }
  long long v = 0;
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == text.size()) throw ParseError("bad residue '" + text + "'");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad residue '" + text + "'");
    v = v * 10 + (text[i] - '0');
    if (v > (1ll << 40)) throw ParseError("residue out of range '" + text + "'");
  }
  return from_int(f, neg ? -v : v);
}

bool FieldElem::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool FieldElem::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void FieldElem::require_same_field(const FieldElem& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatchError("mixed-field arithmetic: " + field_.to_string() + " vs " + o.field_.to_string());
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  if (field_.is_rational()) {
    r.rat_ = -rat_;
  } else if (res_ != 0) {
    r.res_ = field_.modulus() - res_;
  }
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_field(o);
  FieldElem r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = rat_ + o.rat_;
  } else {
    r.res_ = (res_ + o.res_) % field_.modulus();
  }
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(o);
  FieldElem r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = rat_ * o.rat_;
  } else {
    r.res_ = res_ * o.res_ % field_.modulus();
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
  FieldElem r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = 1 / rat_;
  } else {
    // p is prime, so a^(p-2) = a^-1.
    r.res_ = mod_pow(res_, field_.modulus() - 2, field_.modulus());
  }
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

int FieldElem::cmp(const FieldElem& o) const {
  require_same_field(o);
  if (field_.is_rational()) return ::cmp(rat_, o.rat_);
  if (res_ < o.res_) return -1;
  return res_ > o.res_ ? 1 : 0;
}

const mpq_class& FieldElem::rational_value() const {
  if (!field_.is_rational()) throw InternalError("rational_value() on GF element");
  return rat_;
}

std::uint64_t FieldElem::residue_value() const {
  if (field_.is_rational()) throw InternalError("residue_value() on rational element");
  return res_;
}

std::string FieldElem::to_string() const {
  return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace polycomp
