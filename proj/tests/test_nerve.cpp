#include <doctest.h>

#include <set>

#include "templ/nerve.hpp"

using namespace templ;
using namespace templ::nerve;
using vcat::Instance;
using vcat::Morphism;

namespace {

// Composable n-paths counted straight from the hom sizes.
std::size_t count_paths(const FiniteCategory& c, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b)
      for (const auto& p : inner_paths(c.size(), n, a, b)) {
        std::size_t prod = 1;
        for (std::size_t i = 1; i < p.size(); ++i) prod *= c.hom(p[i - 1], p[i]).size();
        total += prod;
      }
  return total;
}

// Dual numbers Q[x]/(x^2) on one object, basis (1, x).
EnrichedCategory dual_numbers() {
  EnrichedCategory c;
  c.objects = {"*"};
  c.instance = Instance::modules();
  auto a = vcat::Object::module(2);
  c.homs = {a};
  // (1,1)->1, (1,x)->x, (x,1)->x, (x,x)->0 ; tensor index i*2+j.
  c.composition = {Morphism::linear(vcat::tensor(a, a), a, Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}}))};
  c.units = {Morphism::linear(vcat::Object::module(1), a, Matrix::from_rows({{1}, {0}}))};
  return c;
}

}  // namespace

TEST_CASE("classical nerve sizes") {
  auto t = nerve_classical(terminal_category(Instance::sets()), 3);
  for (const auto& l : t.levels) CHECK(l.size() == 1);
  auto w = nerve_classical(walking_arrow(Instance::sets()), 3);
  CHECK(w.levels[1].size() == 3);
  CHECK(w.levels[2].size() == 4);
  auto d = nerve_classical(discrete_category(2, Instance::sets()), 3);
  for (const auto& l : d.levels) CHECK(l.size() == 2);
  for (const auto& x : {t, w, d}) CHECK(check_simplicial(x).passed());
  auto o = ordinal(3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(standard_simplex(3, 3).levels[n].size() == count_paths(o, n));
  CHECK(check_category(walking_arrow(Instance::modules())).passed());
}

TEST_CASE("broken composition is caught") {
  // Two-element monoid with a non-associative table is impossible to build
  // from a valid one by accident; use a table violating the unit law.
  auto c = finite_category({"*"}, {2}, [](auto, auto, auto, auto f, auto g) { return (f + g) % 2; }, {1});
  Report r = check_category(c);
  CHECK(r.has_failure("left-unit"));
}

TEST_CASE("enriched nerve") {
  auto u = nerve_enriched(unit_algebra(), 3);
  CHECK(check_templicial(u).passed());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(u.level(n)(0, 0).size() == 1);

  auto w = nerve_enriched(walking_arrow(Instance::modules()), 3);
  CHECK(check_templicial(w).passed());
  CHECK(w.level(2)(0, 1).size() == 2);
  CHECK(w.level(2)(1, 0).size() == 0);
  auto ws = nerve_enriched(walking_arrow(Instance::sets()), 3);
  CHECK(check_templicial(ws).passed());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(ws.level(n).total_size() == count_paths(walking_arrow(Instance::sets()), n));

  auto dn = nerve_enriched(dual_numbers(), 3);
  CHECK(check_templicial(dn).passed());
  CHECK(dn.level(3)(0, 0).size() == 8);
}

TEST_CASE("nerve of a functor") {
  auto c = walking_arrow(Instance::sets());
  auto x = nerve_enriched(c, 3);
  CHECK(nerve_functor(identity_functor(c), c, c, 3) == identity_morphism(x));

  auto t = terminal_category(Instance::sets());
  EnrichedFunctor bang{quiver::terminal_vertex_map(2), {}};
  for (const auto& h : c.homs) bang.homs.push_back(vcat::terminal_map(h));
  auto m = nerve_functor(bang, c, t, 3);
  CHECK(check_templicial_morphism(m, x, nerve_enriched(t, 3)).passed());
  for (const auto& level : m.components)
    for (const auto& comp : level.components())
      for (auto v : comp.table()) CHECK(v == 0);

  // x -> 2x on the dual numbers scales x (x) ... (x) x by 2^n.
  auto dn = dual_numbers();
  EnrichedFunctor twice{quiver::identity_map(dn.objects), {Morphism::linear(dn.homs[0], dn.homs[0],
                                                                             Matrix::from_rows({{1, 0}, {0, 2}}))}};
  auto dx = nerve_enriched(dn, 3);
  auto tm = nerve_functor(twice, dn, dn, 3);
  CHECK(check_templicial_morphism(tm, dx, dx).passed());
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& mat = tm.components[n](0, 0).matrix();
    const std::size_t last = mat.rows() - 1;  // x (x) ... (x) x is the last basis vector
    CHECK(mat(last, last) == Rational(1 << n));
  }

  EnrichedFunctor bad = twice;
  bad.homs[0] = Morphism::linear(dn.homs[0], dn.homs[0], Matrix::from_rows({{2, 0}, {0, 2}}));
  CHECK_THROWS_AS(nerve_functor(bad, dn, dn, 3), FunctorError);
}

TEST_CASE("leinster forward and backward") {
  auto w = nerve_classical(walking_arrow(Instance::sets()), 3);
  auto f = leinster_forward(w);
  CHECK(check_colax(f).passed());
  // The 2-simplex (id_0, u) splits as (id_0) and (u).
  const std::size_t x2 = 1;  // objects (0,0,1), arrows (0,0)
  const auto pair = f.mu(1, 1).table()[x2];
  const std::size_t n1 = w.levels[1].size();
  CHECK(pair / n1 == w.s(0, 0).table()[0]);
  CHECK(pair % n1 == w.d(2, 0).table()[x2]);
  CHECK(w.d(2, 0).table()[x2] != w.s(0, 0).table()[1]);

  CHECK(leinster_backward(f, w.base) == w);
  CHECK(same_data(leinster_forward(leinster_backward(f)), f));

  auto t = leinster_forward(standard_simplex(0, 3));
  CHECK(same_data(t, terminal_colax(Instance::sets(), 3)));
  for (std::size_t k = 0; k <= 3; ++k) {
    auto s = standard_simplex(k, 3);
    CHECK(leinster_backward(leinster_forward(s), s.base) == s);
  }

  auto one = restrict_window(w, 1);
  auto f1 = leinster_forward(one);
  CHECK(f1.mu(1, 0) == vcat::pair(vcat::identity(one.levels[1]), one.d(1, 0)));
  CHECK(f1.mu(0, 1) == vcat::pair(one.d(1, 1), vcat::identity(one.levels[1])));

  TruncatedSimplicial lin;
  lin.allocate(0);
  lin.levels[0] = vcat::Object::module(1);
  CHECK_THROWS_AS(leinster_forward(lin), vcat::InstanceError);
}

TEST_CASE("nerve functor is bijective on the walking arrow") {
  auto c = walking_arrow(Instance::sets());
  auto x = nerve_enriched(c, 3);
  auto morphisms = enumerate_morphisms(x, x);
  // Endofunctors of [1] are the three monotone maps.
  CHECK(morphisms.size() == 3);
  for (const auto& m : morphisms) CHECK(check_templicial_morphism(m, x, x).passed());
}
