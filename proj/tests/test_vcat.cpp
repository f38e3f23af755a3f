#include <doctest.h>

#include <random>

#include "templ/vcat.hpp"

using namespace templ;
using namespace templ::vcat;

namespace {

Morphism random_function(std::mt19937_64& rng, const Object& s, const Object& t) {
  std::vector<std::size_t> table(s.size());
  for (auto& v : table) v = rng() % t.size();
  return Morphism::function(s, t, table);
}

Morphism random_linear(std::mt19937_64& rng, const Object& s, const Object& t) {
  Matrix m(t.size(), s.size(), s.field());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m.set(i, j, static_cast<long>(rng() % 5) - 2);
  return Morphism::linear(s, t, m);
}

}  // namespace

TEST_CASE("composition") {
  Object a = Object::set({"x", "y"}), b = Object::set({"u"}), c = Object::set({"v"});
  Morphism f = Morphism::function(a, b, {0, 0});
  Morphism g = Morphism::function(b, c, {0});
  CHECK(compose(identity(b), f) == f);
  CHECK(compose(g, f) == Morphism::function(a, c, {0, 0}));
  CHECK_THROWS_AS(compose(f, g), CompositionError);

  Object q = Object::module(1);
  Morphism two = Morphism::linear(q, q, Matrix::from_rows({{2}}));
  Morphism three = Morphism::linear(q, q, Matrix::from_rows({{3}}));
  CHECK(compose(two, three).matrix() == Matrix::from_rows({{6}}));
  CHECK_THROWS_AS(tensor(f, two), InstanceError);
}

TEST_CASE("composition is associative and unital on random instances") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Object a = Object::set(1 + rng() % 4), b = Object::set(1 + rng() % 4), c = Object::set(1 + rng() % 4),
           d = Object::set(1 + rng() % 4);
    auto f = random_function(rng, a, b), g = random_function(rng, b, c), h = random_function(rng, c, d);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(f, identity(a)) == f);
    Object p = Object::module(rng() % 4), q = Object::module(rng() % 4), r = Object::module(rng() % 4);
    auto u = random_linear(rng, p, q), v = random_linear(rng, q, r);
    CHECK(compose(v, compose(u, identity(p))) == compose(compose(v, u), identity(p)));
  }
}

TEST_CASE("tensor") {
  CHECK(tensor(Object::set(2), Object::set(3)).size() == 6);
  Object a = Object::set({"x", "y"});
  Morphism f = Morphism::function(a, a, {1, 0});
  CHECK(tensor(identity(unit(Instance::sets())), f) == f);
  Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  Object two = Object::module(2);
  Morphism mm = Morphism::linear(two, two, m);
  std::vector<Matrix> blocks{m, m};
  CHECK(tensor(identity(two), mm).matrix() == block_diagonal(blocks, Field{}));
  auto labels = tensor(Object::set({"x", "y"}), Object::set({"u"})).labels();
  CHECK(labels == std::vector<std::string>{"x,u", "y,u"});
}

TEST_CASE("coproducts and copairing") {
  std::vector<Object> none;
  CHECK(coproduct(none, Instance::sets()).object.size() == 0);
  CHECK(coproduct(none, Instance::modules()).object.size() == 0);
  std::vector<Object> two_points{Object::set({"x"}), Object::set({"x"})};
  auto c = coproduct(two_points, Instance::sets());
  CHECK(c.object.size() == 2);
  CHECK(c.injections[0].table() == std::vector<std::size_t>{0});
  CHECK(c.injections[1].table() == std::vector<std::size_t>{1});
  std::vector<Object> lines{Object::module(1), Object::module(1)};
  auto d = coproduct(lines, Instance::modules());
  CHECK(d.injections[0].matrix() == Matrix::from_rows({{1}, {0}}));
  CHECK(d.injections[1].matrix() == Matrix::from_rows({{0}, {1}}));

  // Copairing: u . iota_j = h_j, and disjointness of coprojection images.
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::vector<Object> fam;
    for (int j = 0; j < 3; ++j) fam.push_back(Object::set(rng() % 3));
    Object target = Object::set(1 + rng() % 3);
    std::vector<Morphism> legs;
    for (const auto& a : fam) legs.push_back(random_function(rng, a, target));
    auto cp = coproduct(fam, Instance::sets());
    Morphism u = copair(legs, target);
    for (std::size_t j = 0; j < fam.size(); ++j) CHECK(compose(u, cp.injections[j]) == legs[j]);
    std::vector<int> hit(cp.object.size(), 0);
    for (const auto& inj : cp.injections)
      for (auto v : inj.table()) ++hit[v];
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("equalizers") {
  Object a = Object::set({"x", "y"}), two = Object::set({"0", "1"});
  Morphism f = Morphism::function(a, two, {0, 0}), g = Morphism::function(a, two, {0, 1});
  auto e = equalizer(f, g);
  CHECK(e.object.labels() == std::vector<std::string>{"x"});
  CHECK(equalizer(f, f).inclusion == identity(a));

  Object q2 = Object::module(2);
  auto lf = Morphism::linear(q2, q2, Matrix::identity(2));
  auto lg = Morphism::linear(q2, q2, Matrix::from_rows({{1, 0}, {0, 0}}));
  auto le = equalizer(lf, lg);
  CHECK(le.object.size() == 1);
  // Oracle: f - g = diag(0, 1) kills exactly the first axis.
  CHECK(le.inclusion.matrix() == Matrix::from_rows({{1}, {0}}));
  CHECK(is_mono(le.inclusion));
  CHECK_THROWS_AS(equalizer(f, lf), CompositionError);
}

TEST_CASE("equalizer universal property via factorization") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    Object a = Object::module(1 + rng() % 3), b = Object::module(1 + rng() % 3), x = Object::module(1 + rng() % 3);
    auto f = random_linear(rng, a, b), g = random_linear(rng, a, b);
    auto e = equalizer(f, g);
    // Any h landing in the kernel: h = e . r for random r.
    auto r = random_linear(rng, x, e.object);
    auto h = compose(e.inclusion, r);
    CHECK(compose(f, h) == compose(g, h));
    auto u = factor_through_mono(e.inclusion, h);
    CHECK(u == r);
  }
}

TEST_CASE("factor through mono") {
  Object a = Object::set({"a"}), ab = Object::set({"a", "b"});
  Morphism m = Morphism::function(a, ab, {0});
  Morphism h = Morphism::function(ab, ab, {0, 0});
  CHECK(factor_through_mono(m, h) == Morphism::function(ab, a, {0, 0}));
  CHECK(factor_through_mono(identity(ab), h) == h);
  CHECK_THROWS_AS(factor_through_mono(m, identity(ab)), FactorizationError);

  Object one = Object::module(1), two = Object::module(2);
  auto lm = Morphism::linear(one, two, Matrix::from_rows({{1}, {0}}));
  auto lh = Morphism::linear(one, two, Matrix::from_rows({{3}, {0}}));
  CHECK(factor_through_mono(lm, lh).matrix() == Matrix::from_rows({{3}}));
  auto bad = Morphism::linear(one, two, Matrix::from_rows({{0}, {1}}));
  CHECK_THROWS_AS(factor_through_mono(lm, bad), FactorizationError);
}

TEST_CASE("left distributor is an explicit permutation") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    Object c = Object::module(1 + rng() % 3);
    std::vector<Object> fam{Object::module(rng() % 3), Object::module(1 + rng() % 2), Object::module(rng() % 3)};
    auto dist = left_distributor(c, fam);
    CHECK(is_iso(dist));
    // Naturality: dist . (id (x) (f_1 + f_2 + f_3)) = (id (x) f_1 + ...) . dist
    std::vector<Morphism> fs, tfs;
    for (const auto& a : fam) {
      fs.push_back(random_linear(rng, a, a));
      tfs.push_back(tensor(identity(c), fs.back()));
    }
    auto lhs = compose(dist, tensor(identity(c), direct_sum(fs, Instance::modules())));
    auto rhs = compose(direct_sum(tfs, Instance::modules()), dist);
    CHECK(lhs == rhs);
    // Right distributivity is strict: (A + B) (x) C = A (x) C + B (x) C literally.
    std::vector<Morphism> gs{random_linear(rng, fam[0], fam[0]), random_linear(rng, fam[1], fam[1])};
    auto h = random_linear(rng, c, c);
    std::vector<Morphism> hs{tensor(gs[0], h), tensor(gs[1], h)};
    CHECK(tensor(direct_sum(gs, Instance::modules()), h) == direct_sum(hs, Instance::modules()));
  }
}

TEST_CASE("swap is an involution") {
  Object a = Object::set(2), b = Object::set(3);
  CHECK(compose(swap(b, a), swap(a, b)) == identity(tensor(a, b)));
}

TEST_CASE("comonoids") {
  CHECK(check_comonoid(free_comonoid(Instance::sets(), 2)).passed());
  auto q = free_comonoid(Instance::modules(), 2);
  // Oracle: comult sends e_a to e_a (x) e_a.
  CHECK(q.comult.matrix() == Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
  CHECK(check_comonoid(q).passed());

  // A one-entry perturbation of the counit breaks counitality.
  auto broken = q;
  broken.counit = Morphism::linear(q.carrier, unit(Instance::modules()), Matrix::from_rows({{1, 0}}));
  Report r = check_comonoid(broken);
  CHECK_FALSE(r.passed());
  CHECK(r.has_failure("counit"));
  CHECK_FALSE(r.has_failure("coassociativity"));

  // Swap-composed comultiplication with the broken counit also fails.
  auto swapped = broken;
  swapped.comult = compose(swap(q.carrier, q.carrier), q.comult);
  CHECK(check_comonoid(swapped).has_failure("counit"));
}

TEST_CASE("cartesian and additive structure") {
  Object a = Object::set(2), b = Object::set(3);
  auto f = Morphism::function(a, b, {2, 1});
  auto g = Morphism::function(a, a, {1, 1});
  auto p = pair(f, g);
  CHECK(compose(project_first(b, a), p) == f);
  CHECK(compose(project_second(b, a), p) == g);
  CHECK(terminal_map(a).table() == std::vector<std::size_t>{0, 0});
  CHECK_THROWS_AS(terminal_map(Object::module(2)), InstanceError);
  CHECK_THROWS_AS(zero_map(a, b), InstanceError);

  std::vector<Object> fam{Object::module(1), Object::module(2)};
  auto cp = coproduct(fam, Instance::modules());
  CHECK(compose(projection(fam, 1), cp.injections[1]) == identity(fam[1]));
  CHECK(compose(projection(fam, 1), cp.injections[0]).matrix().is_zero());
  CHECK(add(identity(fam[0]), identity(fam[0])) == scale(identity(fam[0]), 2));
  CHECK(linearize(f, Field{}).matrix() == Matrix::from_rows({{0, 0}, {0, 1}, {1, 0}}));
}
