#pragma once

#include <vector>

#include "polycomp/ratfunc.hpp"

namespace polycomp {

// Dense m x n matrix of polynomials. Desk-scale dimensions; no sparsity.
class PolyMatrix {
 public:
  PolyMatrix(const Field& f, int rows, int cols);
  static PolyMatrix from_entries(const Field& f, int rows, int cols, std::vector<Poly> entries);
  static PolyMatrix identity(const Field& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Poly& at(int i, int j) const { return entries_[index(i, j)]; }
  Poly& at(int i, int j) { return entries_[index(i, j)]; }

  Degree degree() const;  // max entry degree; zero matrix -> -inf marker
  bool is_zero() const;

  PolyMatrix transpose() const;
  static PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);

  // Grid of coefficients of s^k.
  std::vector<FieldElem> coefficient_grid(int k) const;

  bool operator==(const PolyMatrix& o) const;

 private:
  std::size_t index(int i, int j) const;

  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

class RatMatrix {
 public:
  RatMatrix(const Field& f, int rows, int cols);
  static RatMatrix from_entries(const Field& f, int rows, int cols, std::vector<RatFunc> entries);
  static RatMatrix from_poly(const PolyMatrix& p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const RatFunc& at(int i, int j) const { return entries_[index(i, j)]; }
  RatFunc& at(int i, int j) { return entries_[index(i, j)]; }

  bool is_zero() const;
  bool is_polynomial() const;
  PolyMatrix to_poly() const;  // entries must all be polynomial

  RatMatrix transpose() const;
  static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);

  // Monic least common denominator of the entries.
  Poly least_common_denominator() const;

  bool operator==(const RatMatrix& o) const;

 private:
  std::size_t index(int i, int j) const;

  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<RatFunc> entries_;
};

// A polynomial matrix with every entry of degree <= 1, viewed as sX + Y.
class Pencil {
 public:
  explicit Pencil(PolyMatrix m);
  const PolyMatrix& matrix() const { return m_; }

 private:
  PolyMatrix m_;
};

// Exact rank over F(s) by fraction-free (Bareiss) elimination.
int rank_over_function_field(const PolyMatrix& m);
int rank_over_function_field(const RatMatrix& m);

// psi * R, with psi a monic multiple of the least common denominator.
PolyMatrix scale_to_polynomial(const RatMatrix& r, const Poly& psi);

// rev(P)(t) = t^grade P(1/t), entrywise; grade >= deg(P).
PolyMatrix reversal(const PolyMatrix& p, int grade);

// R(1/s), entrywise, re-reduced.
RatMatrix substitute_inverse(const RatMatrix& r);

// First Frobenius companion form with respect to grade g >= max(deg P, 1):
// the (m+(g-1)n) x (gn) pencil sX1 + Y1 with X1 = diag(P_g, I, ..., I) and
// Y1 carrying (P_{g-1} ... P_0) in the first block row and -I subdiagonals.
Pencil companion_form(const PolyMatrix& p, int grade);

// Exact rank of a constant matrix over the coefficient field.
int field_matrix_rank(const Field& f, int rows, int cols, std::vector<FieldElem> grid);

}  // namespace polycomp
