#pragma once

#include <string>
#include <vector>

#include "polycomp/field.hpp"

namespace polycomp {

// Extended integer: finite | +inf | -inf, totally ordered. Out-of-range
// sequence and chain accesses go through this type; stored data never
// contains infinities.
class ExtInt {
 public:
  static ExtInt finite(long long v) { return ExtInt(0, v); }
  static ExtInt pos_inf() { return ExtInt(1, 0); }
  static ExtInt neg_inf() { return ExtInt(-1, 0); }

  bool is_finite() const { return kind_ == 0; }
  long long value() const {
    if (kind_ != 0) throw InternalError("infinite ExtInt used as an integer");
    return v_;
  }

  bool operator==(const ExtInt&) const = default;
  bool operator<(const ExtInt& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    return kind_ == 0 && v_ < o.v_;
  }
  bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

  std::string to_string() const {
    if (kind_ < 0) return "-inf";
    if (kind_ > 0) return "+inf";
    return std::to_string(v_);
  }

 private:
  ExtInt(int kind, long long v) : kind_(kind), v_(v) {}
  int kind_;  // -1, 0, +1
  long long v_;
};

// Finite non-increasing integer sequence with the boundary conventions
// a_i = +inf for i < 1 and a_i = -inf for i > length, realized through
// total accessors.
class IntSeq {
 public:
  IntSeq() = default;
  explicit IntSeq(std::vector<long long> values);
  static IntSeq from_ints(const std::vector<int>& values);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  const std::vector<long long>& values() const { return v_; }

  long long at(int i) const;  // 1-based, in range
  ExtInt at_ext(int i) const;

  long long sum() const;
  // Sum of the first k entries, k clamped to [0, size].
  long long prefix(int k) const;

  bool is_partition() const { return v_.empty() || v_.back() >= 0; }
  // Number of strictly positive entries.
  int positive_count() const;

  bool operator==(const IntSeq&) const = default;

 private:
  std::vector<long long> v_;
};

// Classical majorization for equal-length integer sequences: prefix sums of
// c bounded by those of a, with equal totals.
bool majorize(const IntSeq& c, const IntSeq& a);
bool majorize(const IntSeq& c, const std::vector<long long>& a);

// h_j = min{ i : d_{i-j+1} < c_i }, with d_{q-x+1} = -inf. Defined for
// 1 <= j <= x where x = len(c) - len(d).
int h_index(const IntSeq& c, const IntSeq& d, int j);

// Trace of a generalized-majorization evaluation: one record per condition.
struct GenMajorizationDetail {
  bool tail_bound = true;              // d_i >= c_{i+x} for all i
  std::vector<long long> lhs, rhs;     // the h_j prefix-sum sides, j = 1..x
  bool prefix_bounds = true;           // all lhs <= rhs
  long long total_lhs = 0, total_rhs = 0;
  bool total_equal = true;
  bool holds() const { return tail_bound && prefix_bounds && total_equal; }
};

// c majorized by d and a: c -<' (d, a).
GenMajorizationDetail gen_majorize_detail(const IntSeq& c, const IntSeq& d,
                                          const std::vector<long long>& a);
bool gen_majorize(const IntSeq& c, const IntSeq& d, const std::vector<long long>& a);
bool gen_majorize(const IntSeq& c, const IntSeq& d, const IntSeq& a);

}  // namespace polycomp
