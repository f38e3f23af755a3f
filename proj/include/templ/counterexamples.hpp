#pragma once

// Exact reproductions of three failures: a simplicial map between naive
// nerves that is not a nerve map, a templicial object outside the image of
// the precategory comparison, and a coalgebra base where fibers lose data.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "templ/matrix.hpp"
#include "templ/report.hpp"
#include "templ/templicial.hpp"

namespace templ::cx {

// ---- naive nerve of Z[X] --------------------------------------------------

/// Levels 0..N of Z[X_1..X_n] cut at total degree D, with exact 0/1 matrices
/// for the ring maps d_j, s_i and the augmentations X_i -> 0.
struct PolynomialNerve {
  std::size_t truncation = 0;
  std::size_t degree = 0;
  std::vector<std::vector<std::vector<std::size_t>>> monomials;  // [n][k] = exponent vector
  std::vector<std::vector<Matrix>> faces;                        // [n][j] : level n -> n-1
  std::vector<std::vector<Matrix>> degeneracies;                 // [n][i] : level n -> n+1
  std::vector<Matrix> augmentations;                             // [n] : level n -> Z

  std::size_t basis_size(std::size_t n) const { return monomials.at(n).size(); }
  std::size_t index(std::size_t n, const std::vector<std::size_t>& exponents) const;
};

/// Faces: d_0 kills X_1 and lowers the rest, d_n kills X_n, inner d_j sends
/// X_i to X_i (i <= j) or X_{i-1} (i > j). Degeneracies fix X_i for i <= j and
/// raise the rest; with `literal_indices` they fix only i < j, which makes
/// s_0 = s_1 and breaks d_{n+1} s_n = id.
PolynomialNerve polynomial_nerve(std::size_t truncation, std::size_t degree, bool literal_indices = false);
Report check_polynomial_nerve(const PolynomialNerve& x);
/// alpha_n keeps monomials of total degree <= 1 and kills the rest.
Matrix alpha(const PolynomialNerve& x, std::size_t n);

struct AlphaResult {
  Report report;
  bool simplicial = false;     // the structure maps satisfy the identities
  bool commutes = false;       // (i) alpha commutes with faces and degeneracies
  bool augmented = false;      // (ii) alpha respects the augmentations
  bool multiplicative = true;  // (iii) alpha_1(X X) == alpha_1(X) alpha_1(X)
  std::string witness;
  std::vector<std::size_t> basis_sizes;
};

/// Requires 1 <= N <= 4 and 2 <= D <= 4.
AlphaResult run_alpha_counterexample(std::size_t truncation = 3, std::size_t degree = 3);

// ---- the object Y ------------------------------------------------------------

/// S = {a, c1, c2, b} over Q, truncated at 2. Edges f_i : a -> c_i, g_i : c_i -> b,
/// h : a -> b; Y_2(a,b) = span{w, s_0 h, s_1 h} with d_1 w = h and
/// mu_{1,1} w = f_1 (x) g_1 + f_2 (x) g_2. Everything else is degenerate.
TruncatedTemplicial y_object();

/// V_x = { v in X_2(a,b) : mu_{1,1}(v) lies in the middle-vertex-x block } as basis columns.
Matrix middle_block_subspace(const TruncatedTemplicial& x, std::size_t a, std::size_t b, std::size_t mid);

/// For every level-2 component, whether the V_x span it. Failures of
/// "block-decomposition" locate components no precategory can produce.
Report block_decomposition_report(const TruncatedTemplicial& x);

struct YResult {
  Report report;
  std::vector<std::size_t> block_dims;  // dim V_x for x in S
  std::size_t sum_dim = 0;
  std::size_t total_dim = 0;
  bool w_in_sum = true;
};

YResult run_Y_counterexample();

// ---- coalgebras over F_2 -----------------------------------------------------

struct FiniteCoalgebra {
  std::size_t dim = 0;
  Matrix comult;  // dim^2 x dim, tensor index i*dim + j
  Matrix counit;  // 1 x dim
};

Report check_coalgebra(const FiniteCoalgebra& c);
/// M_2 with basis E11, E12, E21, E22.
FiniteCoalgebra matrix_coalgebra();
/// Delta e_i = e_i (x) e_i.
FiniteCoalgebra grouplike_coalgebra(std::size_t dim);
/// Divided powers: Delta x_n = sum_{i+j=n} x_i (x) x_j.
FiniteCoalgebra divided_power_coalgebra(std::size_t dim);

/// Subspaces of F_2^dim as bitmasks of their members (vectors as integers).
std::vector<std::uint32_t> all_subspaces(std::size_t dim);

/// Largest subcoalgebra inside the span of the columns of w: every subspace
/// enumerated (bitsets), resp. C -> {v in C : Delta v in C (x) C} iterated.
Matrix largest_subcoalgebra_bruteforce(const FiniteCoalgebra& c, const Matrix& w);
Matrix largest_subcoalgebra_iterative(const FiniteCoalgebra& c, const Matrix& w);

struct CoalgebraResult {
  Report report;
  std::size_t subspaces_examined = 0;
  std::vector<std::size_t> preimage_dims;   // linear preimages of the two coordinate lines
  std::vector<std::size_t> pullback_dims;   // their largest subcoalgebras
  bool algorithms_agree = false;
};

CoalgebraResult run_coalgebra_disj_failure();

// ---- parity ----------------------------------------------------------------------

/// For level-2 components (a,b) fixed by the involution whose remaining
/// middle vertices are all swapped in pairs, the non-degenerate part
/// (dimension minus the rank of the degeneracy images) must be even when it
/// splits into swapped blocks. Odd parts are reported under "parity".
/// Throws std::invalid_argument unless `involution` is an involution of S.
Report dimension_parity_note(const TruncatedTemplicial& x, const std::vector<std::size_t>& involution);

}  // namespace templ::cx
