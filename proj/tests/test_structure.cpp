#include <doctest.h>

#include <random>

#include "polycomp/oracle.hpp"
#include "polycomp/structure.hpp"

using namespace polycomp;

namespace {

const Field Q = Field::rationals();

Poly P(std::initializer_list<long long> coeffs) { return Poly::from_ints(Q, coeffs); }

PolyMatrix mat(int rows, int cols, std::vector<Poly> entries) {
  return PolyMatrix::from_entries(Q, rows, cols, std::move(entries));
}

// [s, 0]: the running worked example.
PolyMatrix s_zero_row() { return mat(1, 2, {P({0, 1}), Poly::zero(Q)}); }

RatMatrix diag_s_inv_s() {
  RatMatrix r(Q, 2, 2);
  r.at(0, 0) = RatFunc::from_poly(P({0, 1}));
  r.at(1, 1) = RatFunc::make(Poly::one(Q), P({0, 1}));
  return r;
}

}  // namespace

TEST_CASE("smith_form: hand-checked values") {
  CHECK(smith_form(PolyMatrix::identity(Q, 2)) ==
        std::vector<Poly>{Poly::one(Q), Poly::one(Q)});
  PolyMatrix d(Q, 2, 2);
  d.at(0, 0) = P({0, 1});
  d.at(1, 1) = P({0, 0, 1});
  CHECK(smith_form(d) == std::vector<Poly>{P({0, 1}), P({0, 0, 1})});
  PolyMatrix m(Q, 2, 2);
  m.at(0, 0) = P({0, 1});
  m.at(1, 1) = P({1, 1});
  CHECK(smith_form(m) == std::vector<Poly>{Poly::one(Q), P({0, 1, 1})});
  CHECK(smith_form(PolyMatrix(Q, 2, 2)).empty());
}

TEST_CASE("smith_form equals the determinantal-divisor oracle") {
  std::mt19937_64 rng(41);
  for (const Field& f : {Q, Field::gf(5)}) {
    for (int trial = 0; trial < 25; ++trial) {
      PolyMatrix m = random_instance(f, 1 + static_cast<int>(rng() % 3),
                                     1 + static_cast<int>(rng() % 3), 2, rng());
      CHECK(smith_form(m) == smith_form_determinantal(m));
    }
  }
}

TEST_CASE("smith_mcmillan: hand-checked values") {
  // polynomial input reduces to the Smith form over 1
  PolyMatrix m(Q, 2, 2);
  m.at(0, 0) = P({0, 1});
  m.at(1, 1) = P({1, 1});
  auto inv = smith_mcmillan(RatMatrix::from_poly(m));
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == RatFunc::one(Q));
  CHECK(inv[1] == RatFunc::from_poly(P({0, 1, 1})));

  auto chain = smith_mcmillan(diag_s_inv_s());
  REQUIRE(chain.size() == 2);
  CHECK(chain[0] == RatFunc::make(Poly::one(Q), P({0, 1})));
  CHECK(chain[1] == RatFunc::from_poly(P({0, 1})));

  RatMatrix single(Q, 1, 1);
  single.at(0, 0) = RatFunc::make(Poly::one(Q), P({0, 1}));
  auto one = smith_mcmillan(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RatFunc::make(Poly::one(Q), P({0, 1})));
}

TEST_CASE("orders_at_infinity: hand-checked values") {
  CHECK(orders_at_infinity(s_zero_row()) == std::vector<int>{-1});
  CHECK(orders_at_infinity(diag_s_inv_s()) == std::vector<int>{-1, 1});
  CHECK(orders_at_infinity(PolyMatrix::identity(Q, 3)) == std::vector<int>{0, 0, 0});
}

TEST_CASE("minimal_indices: hand-checked values") {
  CHECK(minimal_indices(s_zero_row(), Side::right) == std::vector<int>{0});
  PolyMatrix nonsing(Q, 2, 2);
  nonsing.at(0, 0) = P({0, 1});
  nonsing.at(0, 1) = P({1});
  nonsing.at(1, 1) = P({1, 1});
  CHECK(minimal_indices(nonsing, Side::right).empty());
  // [1, s]: null vector (-s, 1), none constant
  CHECK(minimal_indices(mat(1, 2, {P({1}), P({0, 1})}), Side::right) == std::vector<int>{1});
}

TEST_CASE("complete_structural_data: worked example [s, 0]") {
  StructuralData d = complete_structural_data(s_zero_row());
  CHECK(d.rank == 1);
  CHECK(d.eta == std::vector<Poly>{P({0, 1})});
  CHECK(d.phi == std::vector<Poly>{Poly::one(Q)});
  CHECK(d.orders == std::vector<int>{-1});
  CHECK(d.col_indices == std::vector<int>{0});
  CHECK(d.row_indices.empty());
  CHECK(d.structural_sum() == 0);
}

TEST_CASE("complete_structural_data: zero and degenerate matrices") {
  StructuralData z = complete_structural_data(PolyMatrix(Q, 1, 1));
  CHECK(z.rank == 0);
  CHECK(z.eta.empty());
  CHECK(z.col_indices == std::vector<int>{0});
  CHECK(z.row_indices == std::vector<int>{0});

  StructuralData d = complete_structural_data(diag_s_inv_s());
  CHECK(d.rank == 2);
  CHECK(d.orders == std::vector<int>{-1, 1});
  CHECK(d.structural_sum() == 0);
}

TEST_CASE("structural sum identity on random matrices") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    PolyMatrix m = random_instance(Field::gf(5), 1 + static_cast<int>(rng() % 3),
                                   1 + static_cast<int>(rng() % 3), 2, rng());
    CHECK(complete_structural_data(m).structural_sum() == 0);
  }
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix r = random_rational_instance(Q, 2, 2, 2, rng());
    CHECK(complete_structural_data(r).structural_sum() == 0);
  }
}

TEST_CASE("first order is minus the degree; first multiplicity is zero") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    PolyMatrix m = random_instance(Field::gf(5), 2, 2, 2, rng());
    if (m.is_zero()) continue;
    StructuralData d = complete_structural_data(m);
    CHECK(d.orders.front() == -m.degree().value());
    InfinityView iv = partial_multiplicities_at_infinity(m);
    CHECK(iv.multiplicities.front() == 0);
  }
}

TEST_CASE("partial_multiplicities_at_infinity: hand-checked values") {
  InfinityView a = partial_multiplicities_at_infinity(s_zero_row());
  CHECK(a.degree == 1);
  CHECK(a.multiplicities == std::vector<int>{0});

  PolyMatrix d(Q, 2, 2);
  d.at(0, 0) = Poly::one(Q);
  d.at(1, 1) = P({0, 1});
  InfinityView b = partial_multiplicities_at_infinity(d);
  CHECK(b.degree == 1);
  CHECK(b.multiplicities == std::vector<int>{0, 1});
  CHECK(b.for_grade(3) == std::vector<int>{2, 3});

  CHECK_THROWS_AS(partial_multiplicities_at_infinity(PolyMatrix(Q, 1, 1)), ValidationError);
}

TEST_CASE("homogeneous invariant factors: hand-checked values") {
  PolyMatrix sI(Q, 2, 2);
  sI.at(0, 0) = P({0, 1});
  sI.at(1, 1) = P({0, 1});
  auto h = homogeneous_invariant_factors(sI);
  REQUIRE(h.size() == 2);
  CHECK(h[0].finite_part == P({0, 1}));
  CHECK(h[0].infinity_multiplicity == 0);
  CHECK(h[1] == h[0]);

  auto g = homogeneous_invariant_factors(s_zero_row());
  REQUIRE(g.size() == 1);
  CHECK(g[0].finite_part == P({0, 1}));
  CHECK(g[0].infinity_multiplicity == 0);

  CHECK_THROWS_AS(homogeneous_invariant_factors(PolyMatrix(Q, 2, 2)), ValidationError);
}

TEST_CASE("homogeneous pair divisibility matches the componentwise order") {
  HomogeneousFactor a{P({0, 1}), 1};
  HomogeneousFactor b{P({0, 0, 1}), 2};
  CHECK(HomogeneousFactor::divides(a, b));
  CHECK(!HomogeneousFactor::divides(b, a));
  CHECK(HomogeneousFactor::lcm(a, b).finite_part == P({0, 0, 1}));
  CHECK(HomogeneousFactor::lcm(a, b).infinity_multiplicity == 2);
  CHECK(a.degree() == 2);
}

TEST_CASE("scale_data: hand-checked values and the scaling lemma") {
  StructuralData d = complete_structural_data(diag_s_inv_s());
  StructuralData scaled = scale_data(d, P({0, 1}));
  CHECK(scaled.eta == std::vector<Poly>{Poly::one(Q), P({0, 0, 1})});
  CHECK(scaled.orders == std::vector<int>{-2, 0});
  CHECK(scaled.col_indices == d.col_indices);
  CHECK(scaled.row_indices == d.row_indices);

  StructuralData poly = complete_structural_data(s_zero_row());
  CHECK(scale_data(poly, Poly::one(Q)) == poly);
  CHECK_THROWS_AS(scale_data(d, Poly::one(Q)), ValidationError);  // not a multiple of phi_1
  CHECK_THROWS_AS(scale_data(d, P({0, 2})), ValidationError);     // not monic
}

TEST_CASE("scale_data commutes with extraction on random rational matrices") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    RatMatrix r = random_rational_instance(Field::gf(5), 2, 2, 1, rng());
    StructuralData d = complete_structural_data(r);
    Poly psi = r.least_common_denominator() * Poly::from_ints(Field::gf(5), {1, 1});
    psi = psi.monic();
    CHECK(scale_data(d, psi) == complete_structural_data(scale_to_polynomial(r, psi)));
  }
}

TEST_CASE("companion_data_map: hand-checked values") {
  StructuralData d = complete_structural_data(s_zero_row());
  CHECK(companion_data_map(d, 1) == d);

  StructuralData c2 = companion_data_map(d, 2);
  CHECK(c2.rank == 3);
  CHECK(c2.eta == std::vector<Poly>{Poly::one(Q), Poly::one(Q), P({0, 1})});
  CHECK(c2.orders == std::vector<int>{-1, -1, 0});
  CHECK(c2.col_indices == std::vector<int>{1});
  CHECK(c2.row_indices.empty());
  // and it matches the actual extraction of the companion pencil
  CHECK(c2 == complete_structural_data(companion_form(s_zero_row(), 2).matrix()));

  CHECK_THROWS_AS(companion_data_map(d, 0), ValidationError);
}

TEST_CASE("companion_data_map commutes with extraction on random matrices") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    PolyMatrix m = random_instance(Field::gf(5), 1 + static_cast<int>(rng() % 2), 2, 2, rng());
    StructuralData d = complete_structural_data(m);
    int deg = m.degree().value_or(0);
    for (int g = std::max(1, deg); g <= std::max(1, deg) + 1; ++g)
      CHECK(companion_data_map(d, g) ==
            complete_structural_data(companion_form(m, g).matrix()));
  }
}

TEST_CASE("transposition swaps the minimal index families") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    PolyMatrix m = random_instance(Field::gf(5), 2, 3, 2, rng());
    StructuralData d = complete_structural_data(m);
    StructuralData t = complete_structural_data(m.transpose());
    CHECK(d.transposed() == t);
    CHECK(minimal_indices(m, Side::left) == minimal_indices(m.transpose(), Side::right));
  }
}

TEST_CASE("matrices with zero rows or columns are first-class") {
  StructuralData no_rows = complete_structural_data(PolyMatrix(Q, 0, 2));
  CHECK(no_rows.rank == 0);
  CHECK(no_rows.col_indices == std::vector<int>{0, 0});
  CHECK(no_rows.row_indices.empty());

  StructuralData no_cols = complete_structural_data(PolyMatrix(Q, 3, 0));
  CHECK(no_cols.rank == 0);
  CHECK(no_cols.col_indices.empty());
  CHECK(no_cols.row_indices == std::vector<int>{0, 0, 0});
}

TEST_CASE("exactness survives coefficient growth over the rationals") {
  // entries with large mixed-denominator coefficients; both Smith routes
  // and the sum identity must stay exact
  std::mt19937_64 rng(8675309);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Poly> es;
    for (int k = 0; k < 9; ++k) {
      int d = static_cast<int>(rng() % 4);
      std::vector<FieldElem> cs;
      for (int i = 0; i <= d; ++i) {
        long long num = static_cast<long long>(rng() % 2001) - 1000;
        long long den = 1 + static_cast<long long>(rng() % 99);
        cs.push_back(FieldElem::from_mpq(mpq_class(static_cast<long>(num),
                                                   static_cast<long>(den))));
      }
      es.push_back(Poly::from_coeffs(Q, cs));
    }
    PolyMatrix m = PolyMatrix::from_entries(Q, 3, 3, es);
    CHECK(smith_form(m) == smith_form_determinantal(m));
    CHECK(complete_structural_data(m).structural_sum() == 0);
  }
}

TEST_CASE("structural data validation catches malformed chains") {
  StructuralData bad;
  bad.field = Q;
  bad.rows = 1;
  bad.cols = 1;
  bad.rank = 1;
  bad.eta = {P({0, 1})};
  bad.phi = {P({0, 1})};  // eta/phi not reduced
  bad.orders = {0};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}
