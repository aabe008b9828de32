#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycomp/majorization.hpp"
#include "polycomp/structure.hpp"

namespace polycomp {

enum class Ring { polynomial, rational };

enum class Mode {
  complete,
  fin_inf_col,
  fin_inf_row,
  fin_inf,
  inf_only,
  fin_only,
  fin_first_order,
};

std::string to_string(Ring r);
std::string to_string(Mode m);
std::optional<Mode> mode_from_string(const std::string& s);
std::optional<Ring> ring_from_string(const std::string& s);

enum class Feasibility { feasible, infeasible, hypothesis_violated };
std::string to_string(Feasibility f);

struct Condition {
  std::string id;
  std::string description;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

// Every condition of the governing theorem is evaluated and recorded; there
// is no short-circuiting, so a failing target shows all failing conditions.
struct Verdict {
  Feasibility status = Feasibility::infeasible;
  std::vector<Condition> trace;
  bool feasible() const { return status == Feasibility::feasible; }
};

// A target for a row completion problem: which invariant families are
// prescribed is dictated by the mode; omitted families stay absent.
struct PrescribedData {
  Mode mode = Mode::complete;
  int z = 0;  // added rows
  int x = 0;  // rank increment

  std::optional<std::vector<Poly>> numerators;    // eps_1 | ... | eps_{r+x}
  std::optional<std::vector<Poly>> denominators;  // psi_{r+x} | ... | psi_1
  std::optional<std::vector<int>> orders;         // q~_1 <= ... <= q~_{r+x}
  std::optional<int> first_order;                 // q~_1 alone
  std::optional<std::vector<int>> col_indices;    // d, n-r-x entries
  std::optional<std::vector<int>> row_indices;    // v, m+z-r-x entries

  // Shape validation relative to a source; assumes 0 <= x <= min(z, n-r)
  // (the predicates turn a violated hypothesis into a verdict first).
  void validate_against(const StructuralData& source, Ring ring) const;

  // The same prescription posed as a column completion of the transpose.
  PrescribedData transposed_for_columns() const;
};

// The Delta forms over reduced fractions:
//   Delta(f, g, p, q) = deg lcm(num f, num g) - deg gcd(den f, den g) + max{p, q}
//   Delta(f, g)       = the same without the max term
//   Delta(f, p)       = deg num f - deg den f + p
//   Delta(f)          = deg num f - deg den f
long long delta(const RatFunc& f, const RatFunc& g, long long p, long long q);
long long delta(const RatFunc& f, const RatFunc& g);
long long delta(const RatFunc& f, long long p);
long long delta(const RatFunc& f);

// Checks lcm((pi/phi)eta, (pi/psi)eps) = (pi/gcd(phi,psi)) lcm(eta, eps)
// under the coprimality preconditions. Property oracle, not a decision path.
bool lcm_scaled_identity_check(const Poly& phi, const Poly& eta, const Poly& psi,
                               const Poly& eps, const Poly& pi);

// Existence of a matrix with the given complete structural data: the
// structural sum must vanish (invariant orders form).
Verdict exists_with_data(const StructuralData& data, Ring ring);

// Degree form of the polynomial existence theorem: invariant factors,
// partial multiplicities of infinity, minimal indices and an explicit
// degree; requires e_1 = 0 and the sum to equal rank * degree.
Verdict exists_with_eigenstructure(const std::vector<Poly>& alpha, const std::vector<int>& mults,
                                   const std::vector<int>& col_indices,
                                   const std::vector<int>& row_indices, int degree, int rows,
                                   int cols);

// Finite-structure-only bordering (Sa-Thompson for polynomials, the rational
// generalization otherwise): z extra rows and q extra columns.
Verdict interlace_finite(const StructuralData& source, const std::vector<Poly>& target_num,
                         const std::vector<Poly>& target_den, int extra_rows, int extra_cols,
                         Ring ring);

enum class BuilderVariant { row_side, column_side, degree_fixed, fin_inf_only };

struct SeqBuilderOutput {
  std::vector<long long> a, b;
  std::vector<long long> a_prefix, b_prefix;
};

// Materializes the a/b sequences of the completion theorems by differencing
// the displayed prefix sums.
SeqBuilderOutput build_sequences(const StructuralData& source, const PrescribedData& target,
                                 BuilderVariant variant, Ring ring);

Verdict complete_row_completion(const StructuralData& source, const PrescribedData& target,
                                Ring ring);
Verdict fin_inf_col_completion(const StructuralData& source, const PrescribedData& target,
                               Ring ring);
Verdict fin_inf_row_completion(const StructuralData& source, const PrescribedData& target,
                               Ring ring);
Verdict fin_inf_completion(const StructuralData& source, const PrescribedData& target, Ring ring);
Verdict inf_only_completion(const StructuralData& source, const PrescribedData& target, Ring ring);
Verdict fin_first_order_completion(const StructuralData& source, const PrescribedData& target,
                                   Ring ring);

// Mode dispatch for row completion problems.
Verdict check_row_completion(const StructuralData& source, const PrescribedData& target,
                             Ring ring);
// Column completion: transpose the source and swap the index families.
Verdict check_column_completion(const StructuralData& source, const PrescribedData& target,
                                Ring ring);

// Row completion at the pencil level (homogeneous invariant factors plus
// minimal indices), adding x rank-raising and y rank-preserving rows. Both
// data sets must be realizable pencil data: polynomial, orders >= -1, zero
// structural sum, non-constant source.
Verdict pencil_row_completion(const StructuralData& source, const StructuralData& target, int x,
                              int y);

// min{ j >= 1 : sum_{i<=j} c_i > sum_{i<=j} a_i } over 1 <= j <= x, or x+1
// when no prefix of c exceeds.
int ell_index(const IntSeq& c, const std::vector<long long>& a, int x);

}  // namespace polycomp
