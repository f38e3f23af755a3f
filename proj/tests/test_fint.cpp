#include <doctest.h>

#include <random>

#include "templ/fint.hpp"

using namespace templ::fint;

namespace {

// Counts monotone maps [m] -> [n] with both endpoints fixed, by recursion on
// the position: the number of non-decreasing sequences of length m-1 in [0, n].
std::size_t count_oracle(std::size_t m, std::size_t n) {
  if (m == 0) return n == 0 ? 1 : 0;
  std::vector<std::vector<std::size_t>> ways(m + 1, std::vector<std::size_t>(n + 1, 0));
  ways[0][0] = 1;
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t y = 0; y <= n; ++y)
      for (std::size_t prev = 0; prev <= y; ++prev) ways[k][y] += ways[k - 1][prev];
  return ways[m][n];
}

Word random_word(std::mt19937_64& rng, std::size_t source, std::size_t length, std::size_t bound) {
  Word w{source, {}};
  std::size_t level = source;
  for (std::size_t t = 0; t < length; ++t) {
    // Face from [level] into [level+1] or degeneracy [level] -> [level-1].
    bool face = level >= 1 && level + 1 <= bound && (level == 1 || rng() % 2 == 0);
    if (face) {
      w.tokens.push_back({Generator::Kind::face, 1 + rng() % level, level + 1});
      ++level;
    } else if (level >= 1) {
      w.tokens.push_back({Generator::Kind::degeneracy, rng() % level, level - 1});
      --level;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("interval map basics") {
  CHECK_THROWS(IntervalMap(2, {0, 2, 1}));
  CHECK_THROWS(IntervalMap(2, {1, 2}));
  CHECK_THROWS(IntervalMap(2, {0, 1}));
  auto f = IntervalMap(2, {0, 0, 2});
  CHECK(compose(IntervalMap::identity(2), f) == f);
  CHECK(compose(IntervalMap::coface(2, 1), IntervalMap::codegeneracy(1, 0)) == IntervalMap(2, {0, 0, 2}));
  CHECK(compose(IntervalMap::codegeneracy(0, 0), IntervalMap(1, {0, 1})) == IntervalMap(0, {0, 0}));
  CHECK_THROWS(compose(f, IntervalMap::identity(1)));
}

TEST_CASE("ordinal sum") {
  auto f = IntervalMap(1, {0, 0, 1});
  CHECK(sum(IntervalMap::identity(0), f) == f);
  CHECK(sum(f, IntervalMap::identity(0)) == f);
  CHECK(sum(IntervalMap::identity(1), IntervalMap::identity(2)) == IntervalMap::identity(3));
  CHECK(sum(f, IntervalMap(2, {0, 2})) == IntervalMap(3, {0, 0, 1, 3}));
  auto g = IntervalMap(2, {0, 2}), h = IntervalMap(1, {0, 1, 1});
  CHECK(sum(sum(f, g), h) == sum(f, sum(g, h)));
}

TEST_CASE("factorization") {
  CHECK(factorize(IntervalMap::identity(3)).tokens.empty());
  auto w = factorize(IntervalMap(2, {0, 0, 2}));
  REQUIRE(w.tokens.size() == 2);
  CHECK(w.tokens[0] == Generator{Generator::Kind::degeneracy, 0, 1});
  CHECK(w.tokens[1] == Generator{Generator::Kind::face, 1, 2});
  auto d = factorize(IntervalMap(2, {0, 2}));
  REQUIRE(d.tokens.size() == 1);
  CHECK(d.tokens[0] == Generator{Generator::Kind::face, 1, 2});
}

TEST_CASE("factorize and evaluate are inverse on all small maps") {
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n)
      for (const auto& f : enumerate_interval_maps(m, n)) {
        Word w = factorize(f);
        CHECK(evaluate(w) == f);
        CHECK(is_normal_form(w));
        for (const auto& g : w.tokens)
          if (g.kind == Generator::Kind::face) CHECK((g.index > 0 && g.index < g.level));
      }
}

TEST_CASE("normal forms are unique under random words") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(rng, 1 + rng() % 4, rng() % 6, 6);
    IntervalMap f = evaluate(w);
    Word nf = factorize(f);
    CHECK(evaluate(nf) == f);
    CHECK(factorize(evaluate(nf)) == nf);
    if (is_normal_form(w)) CHECK(w == nf);
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_interval_maps(0, 0) == std::vector<IntervalMap>{IntervalMap::identity(0)});
  CHECK(enumerate_interval_maps(1, 1) == std::vector<IntervalMap>{IntervalMap::identity(1)});
  CHECK(enumerate_interval_maps(2, 1) == std::vector<IntervalMap>{IntervalMap(1, {0, 0, 1}), IntervalMap(1, {0, 1, 1})});
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n) {
      auto all = enumerate_interval_maps(m, n);
      CHECK(all.size() == count_oracle(m, n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  CHECK_THROWS_AS(enumerate_interval_maps(9, 1), BoundError);
}

TEST_CASE("generator list") {
  // Levels <= 2: s0@0; d1@2; s0@1, s1@1.
  auto g = generators(2);
  CHECK(g.size() == 4);
}
