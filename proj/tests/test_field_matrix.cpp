#include <doctest.h>

#include <random>

#include "templ/kernels.hpp"
#include "templ/matrix.hpp"

using namespace templ;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3));
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(5);
  CHECK(f.add(3, 4) == 2);
  CHECK(f.sub(1, 3) == 3);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.neg(2) == 3);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(f.normalize(Rational(1, 2)) == 3);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK(Field::rationals().name() == "Q");
  CHECK(f.name() == "F_5");
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("nullspace and solve are exact") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  Matrix k = nullspace(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(rank(m) == 1);

  Matrix a = Matrix::from_rows({{1, 0}, {0, 0}});
  Matrix b = Matrix::from_rows({{3}, {0}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(a, Matrix::from_rows({{0}, {1}})));

  Matrix g = Matrix::from_rows({{2, 1}, {1, 1}});
  auto inv = inverse(g);
  REQUIRE(inv);
  CHECK(g * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 1}, {1, 1}})));
}

TEST_CASE("elimination over F_2") {
  Field f = Field::prime(2);
  Matrix m = Matrix::from_rows({{1, 1}, {1, 1}}, f);
  CHECK(rank(m) == 1);
  Matrix k = nullspace(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
}

TEST_CASE("identity kronecker is block diagonal") {
  Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  std::vector<Matrix> blocks{m, m};
  CHECK(kronecker(Matrix::identity(2), m) == block_diagonal(blocks, Field{}));
}

TEST_CASE("serial and OpenMP kernels agree") {
  std::mt19937_64 rng(7);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 5; ++t) {
      Matrix a = random_matrix(rng, 9, 6, f), b = random_matrix(rng, 6, 8, f);
      CHECK(kernels::serial::multiply(a, b) == kernels::omp::multiply(a, b));
      CHECK(kernels::serial::kronecker(a, b) == kernels::omp::kronecker(a, b));
      // Independent oracle: the textbook triple loop.
      Matrix c(9, 8, f);
      for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
          Rational s = 0;
          for (std::size_t k = 0; k < 6; ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
          c.set(i, j, s);
        }
      CHECK(kernels::multiply(a, b) == c);
    }
  }
  std::vector<int> hits(100, 0);
  kernels::omp::for_each_index(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 100);
  CHECK_THROWS(kernels::omp::for_each_index(10, [](std::size_t i) {
    if (i == 3) throw std::runtime_error("boom");
  }));
}
