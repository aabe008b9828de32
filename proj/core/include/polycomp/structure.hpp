#pragma once

#include <string>
#include <vector>

#include "polycomp/matrix.hpp"

namespace polycomp {

// The complete structural data of a rational (or polynomial) matrix:
// invariant rational functions eta_i/phi_i, invariant orders at infinity,
// and the column/row minimal indices, together with the ambient dimensions.
// For a polynomial matrix every phi_i is 1 and the eta chain is the chain of
// invariant factors.
struct StructuralData {
  Field field;
  int rows = 0;
  int cols = 0;
  int rank = 0;
  std::vector<Poly> eta;        // eta_1 | ... | eta_r, monic
  std::vector<Poly> phi;        // phi_r | ... | phi_1, monic
  std::vector<int> orders;      // p~_1 <= ... <= p~_r
  std::vector<int> col_indices; // c_1 >= ... >= c_{n-r} >= 0
  std::vector<int> row_indices; // u_1 >= ... >= u_{m-r} >= 0

  bool is_polynomial() const;
  // sum(c) + sum(u) + sum(p~) + sum(deg eta) - sum(deg phi)
  long long structural_sum() const;
  // Shape and chain invariants; does not require the sum identity.
  void validate() const;

  StructuralData transposed() const;

  std::string key() const;  // canonical form for ordering and dedup
  bool operator==(const StructuralData& o) const;
  bool operator<(const StructuralData& o) const { return key() < o.key(); }
};

// Smith normal form invariant factors by unimodular elimination with
// minimal-degree pivoting.
std::vector<Poly> smith_form(const PolyMatrix& p);
// Independent oracle: successive quotients D_i / D_{i-1} of the monic gcds
// of all i x i minors.
std::vector<Poly> smith_form_determinantal(const PolyMatrix& p);

// Invariant rational functions (Smith-McMillan diagonal), reduced.
std::vector<RatFunc> smith_mcmillan(const RatMatrix& r);

// Invariant orders at infinity, via the s-adic valuations of the invariant
// rational functions of R(1/s).
std::vector<int> orders_at_infinity(const RatMatrix& r);
std::vector<int> orders_at_infinity(const PolyMatrix& p);

enum class Side { right, left };  // right = column indices, left = row indices

// Minimal indices by degree-by-degree polynomial kernel search, reported in
// non-increasing order.
std::vector<int> minimal_indices(const PolyMatrix& m, Side side);
std::vector<int> minimal_indices(const RatMatrix& m, Side side);

StructuralData complete_structural_data(const PolyMatrix& m);
StructuralData complete_structural_data(const RatMatrix& m);

// Partial multiplicities of infinity of a nonzero polynomial matrix: the
// multiplicities of 0 in rev(P), cross-checked against e_i = p_i + d.
struct InfinityView {
  int degree = 0;
  std::vector<int> multiplicities;  // e_1 <= ... <= e_r, e_1 = 0
  // Multiplicities relative to a grade g >= degree: e_i + (g - degree).
  std::vector<int> for_grade(int grade) const;
};
InfinityView partial_multiplicities_at_infinity(const PolyMatrix& p);

// Homogeneous invariant factor phi_i(s,t) = t^{e_i} t^{deg a_i} a_i(s/t),
// represented as the pair (finite part, multiplicity of t). Divisibility of
// the pairs is componentwise and coincides with bivariate divisibility.
struct HomogeneousFactor {
  Poly finite_part;
  int infinity_multiplicity = 0;

  static HomogeneousFactor one(const Field& f) { return {Poly::one(f), 0}; }
  static bool divides(const HomogeneousFactor& a, const HomogeneousFactor& b);
  static HomogeneousFactor lcm(const HomogeneousFactor& a, const HomogeneousFactor& b);
  long long degree() const;
  bool operator==(const HomogeneousFactor& o) const {
    return finite_part == o.finite_part && infinity_multiplicity == o.infinity_multiplicity;
  }
};
std::vector<HomogeneousFactor> homogeneous_invariant_factors(const PolyMatrix& p);

// Structural data of psi * R from the data of R (scaling lemma): invariant
// factors psi*eta_i/phi_i, orders shifted by -deg psi, minimal indices kept.
StructuralData scale_data(const StructuralData& data, const Poly& psi);

// Structural data of the first Frobenius companion form C_{g,P} from the
// data of P: (g-1)n trivial factors prepended, orders -1 repeated then
// g-1+p_i, column indices shifted by g-1, row indices kept.
StructuralData companion_data_map(const StructuralData& data, int grade);

}  // namespace polycomp
