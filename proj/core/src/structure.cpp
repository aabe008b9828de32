#include "polycomp/structure.hpp"

#include <algorithm>
#include <numeric>

namespace polycomp {

bool StructuralData::is_polynomial() const {
  return std::all_of(phi.begin(), phi.end(), [](const Poly& p) { return p.is_one(); });
}

long long StructuralData::structural_sum() const {
  long long s = 0;
  for (int c : col_indices) s += c;
  for (int u : row_indices) s += u;
  for (int p : orders) s += p;
  for (const Poly& e : eta) s += e.degree().value();
  for (const Poly& p : phi) s -= p.degree().value();
  return s;
}

void StructuralData::validate() const {
  if (rank < 0 || rows < 0 || cols < 0 || rank > std::min(rows, cols))
    throw ValidationError("structural data: rank/dimension mismatch");
  if (static_cast<int>(eta.size()) != rank || static_cast<int>(phi.size()) != rank ||
      static_cast<int>(orders.size()) != rank)
    throw ValidationError("structural data: chain lengths must equal the rank");
  if (static_cast<int>(col_indices.size()) != cols - rank)
    throw ValidationError("structural data: expected " + std::to_string(cols - rank) +
                          " column minimal indices");
  if (static_cast<int>(row_indices.size()) != rows - rank)
    throw ValidationError("structural data: expected " + std::to_string(rows - rank) +
                          " row minimal indices");
  for (int i = 0; i < rank; ++i) {
    if (!(eta[i].field() == field) || !(phi[i].field() == field))
      throw ValidationError("structural data: chain entry from wrong field");
    if (eta[i].is_zero() || !eta[i].is_monic())
      throw ValidationError("structural data: eta chain entries must be monic");
    if (phi[i].is_zero() || !phi[i].is_monic())
      throw ValidationError("structural data: phi chain entries must be monic");
    if (!Poly::gcd(eta[i], phi[i]).is_one())
      throw ValidationError("structural data: eta_i/phi_i must be reduced");
    if (i + 1 < rank) {
      if (!Poly::divides(eta[i], eta[i + 1]))
        throw ValidationError("structural data: eta chain divisibility fails");
      if (!Poly::divides(phi[i + 1], phi[i]))
        throw ValidationError("structural data: phi chain divisibility fails");
      if (orders[i] > orders[i + 1])
        throw ValidationError("structural data: orders must be non-decreasing");
    }
  }
  auto check_partition = [](const std::vector<int>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw ValidationError(std::string("structural data: negative ") + what);
      if (i > 0 && v[i - 1] < v[i])
        throw ValidationError(std::string("structural data: ") + what + " not non-increasing");
    }
  };
  check_partition(col_indices, "column minimal index");
  check_partition(row_indices, "row minimal index");
}

StructuralData StructuralData::transposed() const {
  StructuralData t = *this;
  std::swap(t.rows, t.cols);
  std::swap(t.col_indices, t.row_indices);
  return t;
}

std::string StructuralData::key() const {
  std::string k = field.to_string() + "|" + std::to_string(rows) + "x" + std::to_string(cols) +
                  "|r" + std::to_string(rank);
  k += "|e";
  for (const Poly& p : eta) {
    for (const auto& c : p.coeffs()) k += c.to_string() + ",";
    k += ";";
  }
  k += "|f";
  for (const Poly& p : phi) {
    for (const auto& c : p.coeffs()) k += c.to_string() + ",";
    k += ";";
  }
  k += "|o";
  for (int v : orders) k += std::to_string(v) + ",";
  k += "|c";
  for (int v : col_indices) k += std::to_string(v) + ",";
  k += "|u";
  for (int v : row_indices) k += std::to_string(v) + ",";
  return k;
}

bool StructuralData::operator==(const StructuralData& o) const {
  return field == o.field && rows == o.rows && cols == o.cols && rank == o.rank && eta == o.eta &&
         phi == o.phi && orders == o.orders && col_indices == o.col_indices &&
         row_indices == o.row_indices;
}

namespace {

struct Grid {
  int rows, cols;
  Field field;
  std::vector<Poly> e;

  Poly& at(int i, int j) {
    return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  }
};

Grid to_grid(const PolyMatrix& p) {
  Grid g{p.rows(), p.cols(), p.field(), {}};
  g.e.reserve(static_cast<std::size_t>(p.rows()) * static_cast<std::size_t>(p.cols()));
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) g.e.push_back(p.at(i, j));
  return g;
}

}  // namespace

std::vector<Poly> smith_form(const PolyMatrix& p) {
  Grid g = to_grid(p);
  const Field& f = g.field;
  std::vector<Poly> chain;
  int t = 0;
  const int limit = std::min(g.rows, g.cols);
  while (t < limit) {
    // Minimal-degree nonzero pivot in the trailing submatrix.
    int pi = -1, pj = -1;
    Degree best = Degree::minus_infinity();
    for (int i = t; i < g.rows; ++i)
      for (int j = t; j < g.cols; ++j) {
        const Poly& e = g.at(i, j);
        if (e.is_zero()) continue;
        if (pi < 0 || e.degree() < best) {
          pi = i;
          pj = j;
          best = e.degree();
        }
      }
    if (pi < 0) break;
    for (int j = t; j < g.cols; ++j) std::swap(g.at(pi, j), g.at(t, j));
    for (int i = t; i < g.rows; ++i) std::swap(g.at(i, pj), g.at(i, t));

    bool clean = true;
    for (int i = t + 1; i < g.rows; ++i) {
      if (g.at(i, t).is_zero()) continue;
      Poly q = Poly::divrem(g.at(i, t), g.at(t, t)).first;
      for (int j = t; j < g.cols; ++j) g.at(i, j) = g.at(i, j) - q * g.at(t, j);
      if (!g.at(i, t).is_zero()) clean = false;  // remainder has smaller degree
    }
    for (int j = t + 1; j < g.cols; ++j) {
      if (g.at(t, j).is_zero()) continue;
      Poly q = Poly::divrem(g.at(t, j), g.at(t, t)).first;
      for (int i = t; i < g.rows; ++i) g.at(i, j) = g.at(i, j) - q * g.at(i, t);
      if (!g.at(t, j).is_zero()) clean = false;
    }
    if (!clean) continue;  // re-pick a smaller pivot

    // Pivot must divide the whole trailing submatrix before we commit.
    bool divides_all = true;
    for (int i = t + 1; i < g.rows && divides_all; ++i)
      for (int j = t + 1; j < g.cols && divides_all; ++j)
        if (!Poly::divrem(g.at(i, j), g.at(t, t)).second.is_zero()) {
          for (int jj = t; jj < g.cols; ++jj) g.at(t, jj) = g.at(t, jj) + g.at(i, jj);
          divides_all = false;
        }
    if (!divides_all) continue;

    chain.push_back(g.at(t, t).monic());
    ++t;
  }
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!Poly::divides(chain[i - 1], chain[i]))
      throw InternalError("smith_form produced a non-divisible chain");
  return chain;
}

namespace {

Poly poly_det(Grid& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  // Cofactor expansion; minors are tiny at desk scale.
  const std::size_t k = rows.size();
  if (k == 1) return g.at(rows[0], cols[0]);
  Poly det = Poly::zero(g.field);
  std::vector<int> sub(rows.begin() + 1, rows.end());
  std::vector<int> subcols(cols.begin(), cols.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Poly& e = g.at(rows[0], cols[j]);
    if (!e.is_zero()) {
      subcols.erase(subcols.begin() + static_cast<long>(j));
      Poly minor = poly_det(g, sub, subcols);
      subcols.insert(subcols.begin() + static_cast<long>(j), cols[j]);
      Poly term = e * minor;
      det = (j % 2 == 0) ? det + term : det - term;
    }
  }
  return det;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Poly> smith_form_determinantal(const PolyMatrix& p) {
  Grid g = to_grid(p);
  const Field& f = g.field;
  std::vector<Poly> chain;
  Poly prev = Poly::one(f);
  const int limit = std::min(g.rows, g.cols);
  for (int k = 1; k <= limit; ++k) {
    std::vector<std::vector<int>> rsets, csets;
    subsets(g.rows, k, rsets);
    subsets(g.cols, k, csets);
    Poly dk = Poly::zero(f);
    for (const auto& rs : rsets) {
      for (const auto& cs : csets) {
        Poly det = poly_det(g, rs, cs);
        if (!det.is_zero()) dk = Poly::gcd(dk, det);
        if (dk.is_one()) break;
      }
      if (dk.is_one()) break;
    }
    if (dk.is_zero()) break;  // rank reached
    chain.push_back(Poly::div_exact(dk, prev).monic());
    prev = dk.monic();
  }
  return chain;
}

std::vector<RatFunc> smith_mcmillan(const RatMatrix& r) {
  Poly lcd = r.least_common_denominator();
  PolyMatrix cleared = scale_to_polynomial(r, lcd);
  std::vector<Poly> alpha = smith_form(cleared);
  std::vector<RatFunc> out;
  out.reserve(alpha.size());
  for (const Poly& a : alpha) out.push_back(RatFunc::make(a, lcd));
  // phi_1 must come back as the least common denominator of the entries.
  if (!out.empty() && !(out.front().den() == lcd))
    throw InternalError("Smith-McMillan denominator differs from the lcd");
  return out;
}

std::vector<int> orders_at_infinity(const RatMatrix& r) {
  RatMatrix flipped = substitute_inverse(r);
  std::vector<RatFunc> inv = smith_mcmillan(flipped);
  std::vector<int> orders;
  orders.reserve(inv.size());
  for (const RatFunc& q : inv)
    orders.push_back(q.num().valuation_at_zero() - q.den().valuation_at_zero());
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (orders[i - 1] > orders[i]) throw InternalError("orders at infinity not sorted");
  return orders;
}

std::vector<int> orders_at_infinity(const PolyMatrix& p) {
  return orders_at_infinity(RatMatrix::from_poly(p));
}

namespace {

// Dimension over F of { v : M v = 0, deg v <= k }, via the rank of the
// coefficient convolution system.
int kernel_dimension_up_to(const PolyMatrix& m, int k) {
  const Field& f = m.field();
  const int dm = m.degree().value_or(0);
  const int rows = m.rows() * (dm + k + 1);
  const int cols = m.cols() * (k + 1);
  std::vector<FieldElem> grid(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                              FieldElem::zero(f));
  auto put = [&](int i, int j, const FieldElem& v) {
    grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
         static_cast<std::size_t>(j)] = v;
  };
  // Column (j, t) holds the coefficients of s^t * M e_j.
  for (int j = 0; j < m.cols(); ++j)
    for (int t = 0; t <= k; ++t)
      for (int i = 0; i < m.rows(); ++i)
        for (int dcoef = 0; dcoef <= dm; ++dcoef)
          put(i * (dm + k + 1) + dcoef + t, j * (k + 1) + t, m.at(i, j).coeff(dcoef));
  return cols - field_matrix_rank(f, rows, cols, std::move(grid));
}

}  // namespace

std::vector<int> minimal_indices(const PolyMatrix& m, Side side) {
  if (side == Side::left) return minimal_indices(m.transpose(), Side::right);
  const int r = rank_over_function_field(m);
  const int wanted = m.cols() - r;
  std::vector<int> indices;
  if (wanted == 0) return indices;
  // A minimal basis {w_j} spans every bounded-degree kernel slice, so the
  // count of indices <= k is the increment of the slice dimensions.
  const int dm = m.degree().value_or(0);
  const int bound = std::max(1, r * dm + 1);
  int prev_dim = 0, prev_count = 0;
  for (int k = 0; static_cast<int>(indices.size()) < wanted; ++k) {
    if (k > bound) throw InternalError("minimal index search exceeded its degree bound");
    int dim = kernel_dimension_up_to(m, k);
    int count = dim - prev_dim;  // number of indices <= k
    for (int rep = 0; rep < count - prev_count; ++rep) indices.push_back(k);
    prev_dim = dim;
    prev_count = count;
  }
  std::sort(indices.begin(), indices.end(), std::greater<int>());
  return indices;
}

std::vector<int> minimal_indices(const RatMatrix& m, Side side) {
  // Scaling by the lcd changes neither null space.
  return minimal_indices(scale_to_polynomial(m, m.least_common_denominator()), side);
}

StructuralData complete_structural_data(const RatMatrix& m) {
  StructuralData d;
  d.field = m.field();
  d.rows = m.rows();
  d.cols = m.cols();
  std::vector<RatFunc> inv = smith_mcmillan(m);
  d.rank = static_cast<int>(inv.size());
  if (rank_over_function_field(m) != d.rank)
    throw InternalError("Smith-McMillan rank disagrees with elimination rank");
  for (const RatFunc& q : inv) {
    d.eta.push_back(q.num());
    d.phi.push_back(q.den());
  }
  d.orders = orders_at_infinity(m);
  if (static_cast<int>(d.orders.size()) != d.rank)
    throw InternalError("orders at infinity count disagrees with the rank");
  d.col_indices = minimal_indices(m, Side::right);
  d.row_indices = minimal_indices(m, Side::left);
  d.validate();
  if (d.structural_sum() != 0)
    throw InternalError("extracted data violates the structural sum identity");
  return d;
}

StructuralData complete_structural_data(const PolyMatrix& m) {
  return complete_structural_data(RatMatrix::from_poly(m));
}

std::vector<int> InfinityView::for_grade(int grade) const {
  if (grade < degree) throw ValidationError("grade below matrix degree");
  std::vector<int> out = multiplicities;
  for (int& e : out) e += grade - degree;
  return out;
}

InfinityView partial_multiplicities_at_infinity(const PolyMatrix& p) {
  if (p.is_zero()) throw ValidationError("partial multiplicities of the zero matrix");
  InfinityView view;
  view.degree = p.degree().value();
  std::vector<Poly> rev_chain = smith_form(reversal(p, view.degree));
  for (const Poly& a : rev_chain) view.multiplicities.push_back(a.valuation_at_zero());
  // Cross-check against e_i = p_i + d.
  std::vector<int> orders = orders_at_infinity(p);
  if (orders.size() != view.multiplicities.size())
    throw InternalError("multiplicity count disagrees with order count");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] + view.degree != view.multiplicities[i])
      throw InternalError("partial multiplicities disagree with shifted orders");
  if (!view.multiplicities.empty() && view.multiplicities.front() != 0)
    throw InternalError("first partial multiplicity of infinity must be 0");
  return view;
}

bool HomogeneousFactor::divides(const HomogeneousFactor& a, const HomogeneousFactor& b) {
  return a.infinity_multiplicity <= b.infinity_multiplicity &&
         Poly::divides(a.finite_part, b.finite_part);
}

HomogeneousFactor HomogeneousFactor::lcm(const HomogeneousFactor& a, const HomogeneousFactor& b) {
  return {Poly::lcm(a.finite_part, b.finite_part),
          std::max(a.infinity_multiplicity, b.infinity_multiplicity)};
}

long long HomogeneousFactor::degree() const {
  return finite_part.degree().value() + infinity_multiplicity;
}

std::vector<HomogeneousFactor> homogeneous_invariant_factors(const PolyMatrix& p) {
  if (p.is_zero()) throw ValidationError("homogeneous invariant factors of the zero matrix");
  std::vector<Poly> alpha = smith_form(p);
  InfinityView inf = partial_multiplicities_at_infinity(p);
  std::vector<HomogeneousFactor> out;
  out.reserve(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    out.push_back({alpha[i], inf.multiplicities[i]});
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!HomogeneousFactor::divides(out[i - 1], out[i]))
      throw InternalError("homogeneous invariant factors do not form a chain");
  return out;
}

StructuralData scale_data(const StructuralData& data, const Poly& psi) {
  if (!psi.is_monic()) throw ValidationError("scale_data: psi must be monic");
  if (!data.phi.empty() && !Poly::divides(data.phi.front(), psi))
    throw ValidationError("scale_data: psi must be a multiple of phi_1");
  StructuralData out = data;
  const int shift = psi.degree().value();
  for (int i = 0; i < data.rank; ++i) {
    out.eta[static_cast<std::size_t>(i)] =
        Poly::div_exact(psi * data.eta[static_cast<std::size_t>(i)],
                        data.phi[static_cast<std::size_t>(i)]);
    out.phi[static_cast<std::size_t>(i)] = Poly::one(psi.field());
    out.orders[static_cast<std::size_t>(i)] -= shift;
  }
  out.validate();
  return out;
}

StructuralData companion_data_map(const StructuralData& data, int grade) {
  if (!data.is_polynomial())
    throw ValidationError("companion_data_map requires polynomial data");
  int deg = data.orders.empty() ? 0 : -data.orders.front();
  if (grade < 1 || grade < deg) throw ValidationError("companion grade out of range");
  const int pad = (grade - 1) * data.cols;
  const Field f = data.field;
  StructuralData out;
  out.field = f;
  out.rows = data.rows + pad;
  out.cols = grade * data.cols;
  out.rank = data.rank + pad;
  out.eta.assign(static_cast<std::size_t>(pad), Poly::one(f));
  out.eta.insert(out.eta.end(), data.eta.begin(), data.eta.end());
  out.phi.assign(static_cast<std::size_t>(out.rank), Poly::one(f));
  out.orders.assign(static_cast<std::size_t>(pad), -1);
  for (int p : data.orders) out.orders.push_back(grade - 1 + p);
  for (int c : data.col_indices) out.col_indices.push_back(c + grade - 1);
  out.row_indices = data.row_indices;
  out.validate();
  return out;
}

}  // namespace polycomp
