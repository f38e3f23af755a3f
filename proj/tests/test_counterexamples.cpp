#include <doctest.h>

#include "templ/counterexamples.hpp"
#include "templ/nerve.hpp"

using namespace templ;
using namespace templ::cx;

TEST_CASE("polynomial nerve is augmented simplicial") {
  auto x = polynomial_nerve(3, 3);
  CHECK(check_polynomial_nerve(x).passed());
  // Monomials of degree <= D in n variables: C(n+D, D).
  CHECK(x.basis_size(0) == 1);
  CHECK(x.basis_size(1) == 4);
  CHECK(x.basis_size(2) == 10);
  CHECK(x.basis_size(3) == 20);
  // d_1 on Z[X_1, X_2] sends X_2 to X_1.
  const auto& d1 = x.faces[2][1];
  CHECK(d1(x.index(1, {1}), x.index(2, {0, 1})) == 1);
  CHECK(x.faces[1][0].is_zero() == false);
  CHECK(x.faces[1][0](0, x.index(1, {1})) == 0);

  auto literal = polynomial_nerve(3, 3, true);
  Report r = check_polynomial_nerve(literal);
  CHECK(r.has_failure("face-degeneracy"));
  CHECK(literal.degeneracies[1][0] == literal.degeneracies[1][1]);
}

TEST_CASE("alpha is simplicial but not a ring map") {
  auto x = polynomial_nerve(3, 3);
  const Matrix a1 = alpha(x, 1);
  CHECK(a1(x.index(1, {1}), x.index(1, {1})) == 1);
  CHECK(a1(x.index(1, {2}), x.index(1, {2})) == 0);

  auto res = run_alpha_counterexample(3, 3);
  CHECK(res.simplicial);
  CHECK(res.commutes);
  CHECK(res.augmented);
  CHECK_FALSE(res.multiplicative);
  CHECK(res.witness.find("X1^2") != std::string::npos);
  CHECK(res.report.failures().size() == 1);
  CHECK(res.basis_sizes == std::vector<std::size_t>{1, 4, 10, 20});
  CHECK_THROWS_AS(run_alpha_counterexample(5, 3), std::invalid_argument);
}

TEST_CASE("Y is templicial and not block decomposed") {
  auto y = y_object();
  Report laws = check_templicial(y);
  CHECK_MESSAGE(laws.passed(), laws.summary());
  auto res = run_Y_counterexample();
  CHECK(res.block_dims == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(res.sum_dim == 2);
  CHECK(res.total_dim == 3);
  CHECK_FALSE(res.w_in_sum);
  CHECK(res.report.passed());

  // V_a is spanned by s_0 h (second basis vector), V_b by s_1 h.
  CHECK(middle_block_subspace(y, 0, 3, 0) == Matrix::from_rows({{0}, {1}, {0}}));
  CHECK(middle_block_subspace(y, 0, 3, 3) == Matrix::from_rows({{0}, {0}, {1}}));

  Report blocks = block_decomposition_report(y);
  CHECK(blocks.has_failure("block-decomposition"));
  CHECK(blocks.failures().size() == 1);
  CHECK(blocks.failures()[0].where.find("(a,b)") != std::string::npos);

  // Linearized nerves decompose everywhere.
  auto n = nerve::nerve_enriched(nerve::linearize(nerve::ordinal(3), Field{}), 2);
  CHECK(block_decomposition_report(n).passed());
}

TEST_CASE("coalgebras over F_2") {
  CHECK(all_subspaces(0).size() == 1);
  CHECK(all_subspaces(2).size() == 5);
  CHECK(all_subspaces(3).size() == 16);
  CHECK(all_subspaces(4).size() == 67);

  const Field f2 = Field::prime(2);
  for (const auto& c : {matrix_coalgebra(), grouplike_coalgebra(3), divided_power_coalgebra(4)}) {
    CHECK(check_coalgebra(c).passed());
    // Both algorithms agree on every subspace.
    for (auto mask : all_subspaces(c.dim)) {
      std::vector<std::vector<Rational>> cols;
      for (std::uint32_t v = 1; v < (1u << c.dim); ++v)
        if ((mask >> v) & 1u) {
          cols.emplace_back();
          for (std::size_t i = 0; i < c.dim; ++i) cols.back().push_back((v >> i) & 1u);
        }
      Matrix w = cols.empty() ? Matrix(c.dim, 0, f2) : Matrix::from_rows(cols, c.dim, f2).transpose();
      CHECK(largest_subcoalgebra_bruteforce(c, w) == largest_subcoalgebra_iterative(c, w));
    }
  }
  // In the grouplike coalgebra the answer is spanned by the basis vectors inside W.
  Matrix w = Matrix::from_rows({{1, 0}, {0, 1}, {0, 1}}, f2);
  CHECK(largest_subcoalgebra_iterative(grouplike_coalgebra(3), w).cols() == 1);

  auto res = run_coalgebra_disj_failure();
  CHECK(res.report.passed());
  CHECK(res.subspaces_examined == 67);
  CHECK(res.preimage_dims == std::vector<std::size_t>{3, 3});
  CHECK(res.pullback_dims == std::vector<std::size_t>{0, 0});
  CHECK(res.algorithms_agree);
}

TEST_CASE("parity obstruction") {
  const std::vector<std::size_t> sigma{0, 2, 1, 3};
  Report y = dimension_parity_note(y_object(), sigma);
  CHECK(y.has_failure("parity"));

  // Two composites a -> c_i -> b: the non-degenerate part of X_2(a,b) has dimension 2.
  auto square = nerve::finite_category(
      {"a", "c1", "c2", "b"}, {1, 1, 1, 2, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1},
      [](std::size_t a, std::size_t b, std::size_t c, std::size_t f, std::size_t g) -> std::size_t {
        if (a == b) return g;
        if (b == c) return f;
        return b == 1 ? 0 : 1;
      },
      {0, 0, 0, 0});
  REQUIRE(check_category(square).passed());
  auto sq = nerve::nerve_enriched(nerve::linearize(square, Field{}), 2);
  CHECK(sq.level(2)(0, 3).size() == 6);
  CHECK(dimension_parity_note(sq, sigma).passed());
  CHECK(block_decomposition_report(sq).passed());
  auto disc = discrete_templicial({"a", "c1", "c2", "b"}, vcat::Instance::modules(), 2);
  CHECK(dimension_parity_note(disc, sigma).passed());
  CHECK_THROWS_AS(dimension_parity_note(disc, {1, 2, 0, 3}), std::invalid_argument);
}
