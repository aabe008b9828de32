#include "polycomp/poly.hpp"

#include <algorithm>

namespace polycomp {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(FieldElem c) {
  Field f = c.field();
  std::vector<FieldElem> cs;
  if (!c.is_zero()) cs.push_back(std::move(c));
  return Poly(f, std::move(cs));
}

Poly Poly::monomial(const Field& f, int degree, FieldElem lead) {
  if (degree < 0) throw InternalError("monomial with negative degree");
  if (lead.is_zero()) return zero(f);
  std::vector<FieldElem> cs(static_cast<std::size_t>(degree) + 1, FieldElem::zero(f));
  cs.back() = std::move(lead);
  return Poly(f, std::move(cs));
}

Poly Poly::from_coeffs(const Field& f, std::vector<FieldElem> coeffs) {
  for (const auto& c : coeffs)
    if (!(c.field() == f)) throw FieldMismatchError("coefficient from wrong field");
  Poly p(f, std::move(coeffs));
  p.trim();
  return p;
}

Poly Poly::from_ints(const Field& f, std::initializer_list<long long> coeffs) {
  return from_ints(f, std::vector<long long>(coeffs));
}

Poly Poly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
  std::vector<FieldElem> cs;
  cs.reserve(coeffs.size());
  for (long long v : coeffs) cs.push_back(FieldElem::from_int(f, v));
  return from_coeffs(f, std::move(cs));
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree::of(static_cast<int>(coeffs_.size()) - 1);
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

FieldElem Poly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return FieldElem::zero(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (!(field_ == o.field_)) throw FieldMismatchError("polynomial addition across fields");
  std::vector<FieldElem> cs(std::max(coeffs_.size(), o.coeffs_.size()), FieldElem::zero(field_));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    FieldElem a = i < coeffs_.size() ? coeffs_[i] : FieldElem::zero(field_);
    FieldElem b = i < o.coeffs_.size() ? o.coeffs_[i] : FieldElem::zero(field_);
    cs[i] = a + b;
  }
  Poly r(field_, std::move(cs));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!(field_ == o.field_)) throw FieldMismatchError("polynomial product across fields");
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<FieldElem> cs(coeffs_.size() + o.coeffs_.size() - 1, FieldElem::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      cs[i + j] = cs[i + j] + coeffs_[i] * o.coeffs_[j];
  Poly r(field_, std::move(cs));
  r.trim();
  return r;
}

Poly Poly::operator*(const FieldElem& c) const {
  if (c.is_zero()) return zero(field_);
  Poly r = *this;
  for (auto& x : r.coeffs_) x = x * c;
  return r;
}

FieldElem Poly::leading() const {
  if (coeffs_.empty()) return FieldElem::zero(field_);
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inverse();
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (!(a.field_ == b.field_)) throw FieldMismatchError("polynomial division across fields");
  Poly rem = a;
  int db = b.degree().value();
  FieldElem lead_inv = b.leading().inverse();
  std::vector<FieldElem> q;
  int dq = a.degree().value_or(-1) - db;
  if (dq < 0) return {zero(a.field_), rem};
  q.assign(static_cast<std::size_t>(dq) + 1, FieldElem::zero(a.field_));
  while (!rem.is_zero() && db <= rem.degree().value()) {
    int k = rem.degree().value() - db;
    FieldElem factor = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(k)] = factor;
    rem = rem - b.shifted_up(k) * factor;
  }
  Poly qq(a.field_, std::move(q));
  qq.trim();
  return {std::move(qq), std::move(rem)};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return zero(a.field_);
  Poly g = gcd(a, b);
  return div_exact(a * b, g).monic();
}

bool Poly::divides(const Poly& a, const Poly& b) {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  return divrem(b, a).second.is_zero();
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::valuation_at_zero() const {
  if (is_zero()) throw InternalError("s-adic valuation of the zero polynomial");
  int v = 0;
  while (coeffs_[static_cast<std::size_t>(v)].is_zero()) ++v;
  return v;
}

Poly Poly::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw InternalError("shifted_up with negative exponent");
  std::vector<FieldElem> cs(coeffs_.size() + static_cast<std::size_t>(k), FieldElem::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + static_cast<std::size_t>(k)] = coeffs_[i];
  return Poly(field_, std::move(cs));
}

Poly Poly::reversal(int grade) const {
  if (Degree::of(grade) < degree())
    throw ValidationError("reversal grade " + std::to_string(grade) + " below degree " +
                          degree().to_string());
  std::vector<FieldElem> cs(static_cast<std::size_t>(grade) + 1, FieldElem::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    cs[static_cast<std::size_t>(grade) - i] = coeffs_[i];
  Poly r(field_, std::move(cs));
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

int Poly::cmp(const Poly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size() ? -1 : 1;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    int c = coeffs_[i].cmp(o.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::to_display(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElem& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      out += neg ? "-" : "+";
      if (neg) cs = cs.substr(1);
    }
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") {
      out += cs;
      out += "*";
    }
    out += var;
    if (i > 1) {
      out += "^";
      out += std::to_string(i);
    }
  }
  return out;
}

}  // namespace polycomp
