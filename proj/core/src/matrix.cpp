#include "polycomp/matrix.hpp"

#include <algorithm>
#include <utility>

namespace polycomp {

PolyMatrix::PolyMatrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  Poly::zero(f));
}

std::size_t PolyMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw InternalError("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j);
}

PolyMatrix PolyMatrix::from_entries(const Field& f, int rows, int cols,
                                    std::vector<Poly> entries) {
  if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw ValidationError("entry count does not match matrix dimensions");
  PolyMatrix m(f, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!(entries[k].field() == f)) throw FieldMismatchError("matrix entry from wrong field");
    m.entries_[k] = std::move(entries[k]);
  }
  return m;
}

PolyMatrix PolyMatrix::identity(const Field& f, int n) {
  PolyMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
  return m;
}

Degree PolyMatrix::degree() const {
  Degree d = Degree::minus_infinity();
  for (const auto& e : entries_)
    if (d < e.degree()) d = e.degree();
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols_ != bottom.cols_ || !(top.field_ == bottom.field_))
    throw ValidationError("vstack shape/field mismatch");
  PolyMatrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  for (int i = 0; i < top.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) m.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) m.at(top.rows_ + i, j) = bottom.at(i, j);
  return m;
}

std::vector<FieldElem> PolyMatrix::coefficient_grid(int k) const {
  std::vector<FieldElem> g;
  g.reserve(entries_.size());
  for (const auto& e : entries_) g.push_back(e.coeff(k));
  return g;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

RatMatrix::RatMatrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  RatFunc::zero(f));
}

std::size_t RatMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw InternalError("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j);
}

RatMatrix RatMatrix::from_entries(const Field& f, int rows, int cols,
                                  std::vector<RatFunc> entries) {
  if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw ValidationError("entry count does not match matrix dimensions");
  RatMatrix m(f, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!(entries[k].field() == f)) throw FieldMismatchError("matrix entry from wrong field");
    m.entries_[k] = std::move(entries[k]);
  }
  return m;
}

RatMatrix RatMatrix::from_poly(const PolyMatrix& p) {
  RatMatrix m(p.field(), p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) m.at(i, j) = RatFunc::from_poly(p.at(i, j));
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const RatFunc& r) { return r.is_zero(); });
}

bool RatMatrix::is_polynomial() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const RatFunc& r) { return r.is_polynomial(); });
}

PolyMatrix RatMatrix::to_poly() const {
  if (!is_polynomial()) throw ValidationError("matrix has non-polynomial entries");
  PolyMatrix m(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).num();
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.cols_ != bottom.cols_ || !(top.field_ == bottom.field_))
    throw ValidationError("vstack shape/field mismatch");
  RatMatrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  for (int i = 0; i < top.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) m.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) m.at(top.rows_ + i, j) = bottom.at(i, j);
  return m;
}

Poly RatMatrix::least_common_denominator() const {
  Poly l = Poly::one(field_);
  for (const auto& e : entries_) l = Poly::lcm(l, e.den());
  return l;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

Pencil::Pencil(PolyMatrix m) : m_(std::move(m)) {
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j)
      if (Degree::of(1) < m_.at(i, j).degree())
        throw ValidationError("pencil entry of degree > 1");
}

namespace {

// Fraction-free elimination on a scratch copy. Pivots are chosen as any
// nonzero entry; divisions by the previous pivot are exact over F[s].
int bareiss_rank(std::vector<Poly> a, int rows, int cols, const Field& f) {
  auto at = [&](int i, int j) -> Poly& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  };
  Poly prev = Poly::one(f);
  int rank = 0;
  for (int k = 0; rank < rows && k < cols; ++k) {
    int pivot_row = -1;
    for (int i = rank; i < rows; ++i)
      if (!at(i, k).is_zero()) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != rank)
      for (int j = k; j < cols; ++j) std::swap(at(pivot_row, j), at(rank, j));
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j)
        at(i, j) = Poly::div_exact(at(rank, k) * at(i, j) - at(i, k) * at(rank, j), prev);
      at(i, k) = Poly::zero(f);
    }
    prev = at(rank, k);
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_over_function_field(const PolyMatrix& m) {
  std::vector<Poly> a;
  a.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
  return bareiss_rank(std::move(a), m.rows(), m.cols(), m.field());
}

int rank_over_function_field(const RatMatrix& m) {
  // Clearing denominators preserves the rank.
  return rank_over_function_field(scale_to_polynomial(m, m.least_common_denominator()));
}

PolyMatrix scale_to_polynomial(const RatMatrix& r, const Poly& psi) {
  if (!psi.is_monic()) throw ValidationError("scaling polynomial must be monic");
  if (!Poly::divides(r.least_common_denominator(), psi))
    throw ValidationError("scaling polynomial is not a multiple of the least common denominator");
  PolyMatrix out(r.field(), r.rows(), r.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) {
      RatFunc scaled = r.at(i, j) * psi;
      if (!scaled.is_polynomial()) throw InternalError("scaling left a rational entry");
      out.at(i, j) = scaled.num();
    }
  return out;
}

PolyMatrix reversal(const PolyMatrix& p, int grade) {
  if (Degree::of(grade) < p.degree())
    throw ValidationError("reversal grade below matrix degree");
  PolyMatrix out(p.field(), p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) out.at(i, j) = p.at(i, j).reversal(grade);
  return out;
}

RatMatrix substitute_inverse(const RatMatrix& r) {
  RatMatrix out(r.field(), r.rows(), r.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) out.at(i, j) = r.at(i, j).substitute_inverse();
  return out;
}

Pencil companion_form(const PolyMatrix& p, int grade) {
  if (grade < 1) throw ValidationError("companion grade must be >= 1");
  if (Degree::of(grade) < p.degree())
    throw ValidationError("companion grade below matrix degree");
  const Field& f = p.field();
  const int m = p.rows(), n = p.cols(), g = grade;
  PolyMatrix c(f, m + (g - 1) * n, g * n);
  Poly s = Poly::variable(f);
  // First block row: s*P_g + P_{g-1}, then P_{g-2}, ..., P_0.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      c.at(i, j) = Poly::constant(p.at(i, j).coeff(g)) * s +
                   Poly::constant(p.at(i, j).coeff(g - 1));
      for (int b = 1; b < g; ++b) c.at(i, b * n + j) = Poly::constant(p.at(i, j).coeff(g - 1 - b));
    }
  // Block row k below carries -I at block column k-1 and s*I at block column k.
  for (int b = 0; b + 1 < g; ++b)
    for (int j = 0; j < n; ++j) {
      c.at(m + b * n + j, b * n + j) = Poly::constant(-FieldElem::one(f));
      c.at(m + b * n + j, (b + 1) * n + j) = s;
    }
  return Pencil(std::move(c));
}

int field_matrix_rank(const Field& f, int rows, int cols, std::vector<FieldElem> grid) {
  if (grid.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw InternalError("field_matrix_rank grid size mismatch");
  auto at = [&](int i, int j) -> FieldElem& {
    return grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                static_cast<std::size_t>(j)];
  };
  int rank = 0;
  for (int k = 0; rank < rows && k < cols; ++k) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (!at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = k; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    FieldElem inv = at(rank, k).inverse();
    for (int i = rank + 1; i < rows; ++i) {
      if (at(i, k).is_zero()) continue;
      FieldElem factor = at(i, k) * inv;
      for (int j = k; j < cols; ++j) at(i, j) = at(i, j) - factor * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace polycomp
