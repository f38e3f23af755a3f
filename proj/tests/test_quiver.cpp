#include <doctest.h>

#include <random>

#include "templ/quiver.hpp"

using namespace templ;
using namespace templ::quiver;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

Quiver random_quiver(std::mt19937_64& rng, std::size_t n, Instance inst, std::size_t max_size = 2) {
  std::vector<Object> comps;
  for (std::size_t k = 0; k < n * n; ++k) comps.push_back(Object::of(inst, rng() % (max_size + 1)));
  return {names(n), inst, comps};
}

QuiverMorphism random_endo(std::mt19937_64& rng, const Quiver& q) {
  std::vector<Morphism> comps;
  for (const auto& c : q.components()) {
    if (c.kind() == vcat::Kind::finset) {
      std::vector<std::size_t> t(c.size());
      for (auto& v : t) v = rng() % c.size();
      comps.push_back(Morphism::function(c, c, t));
    } else {
      Matrix m(c.size(), c.size(), c.field());
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) m.set(i, j, static_cast<long>(rng() % 5) - 2);
      comps.push_back(Morphism::linear(c, c, m));
    }
  }
  return {q, q, comps};
}

VertexMap random_vertex_map(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  VertexMap f{std::vector<std::size_t>(n), names(m)};
  for (auto& y : f.images) y = rng() % m;
  return f;
}

}  // namespace

TEST_CASE("unit quiver") {
  CHECK(qunit(names(1), Instance::sets())(0, 0).size() == 1);
  auto u = qunit(names(2), Instance::modules());
  CHECK(u(0, 0).size() == 1);
  CHECK(u(0, 1).size() == 0);
  CHECK(u(1, 0).size() == 0);
  CHECK(u(1, 1).size() == 1);
  auto s = qunit(names(3), Instance::sets());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(s(a, b).size() == (a == b ? 1u : 0u));
}

TEST_CASE("quiver tensor") {
  std::vector<Object> ones(4, Object::module(1));
  Quiver q(names(2), Instance::modules(), ones);
  auto t = qtensor(q, q);
  for (const auto& c : t.quiver.components()) CHECK(c.size() == 2);
  CHECK(t.injection(0, 1, 1).matrix() == Matrix::from_rows({{0}, {1}}));

  std::vector<Object> sets{Object::set(2), Object::set(0), Object::set(1), Object::set(3)};
  Quiver p(names(2), Instance::sets(), sets);
  auto pp = qtensor_object(p, p);
  // (0,0): 2*2 + 0*1 ; (0,1): 2*0 + 0*3 ; (1,0): 1*2 + 3*1 ; (1,1): 1*0 + 3*3
  CHECK(pp(0, 0).size() == 4);
  CHECK(pp(0, 1).size() == 0);
  CHECK(pp(1, 0).size() == 5);
  CHECK(pp(1, 1).size() == 9);

  CHECK(left_unitor(p).source() == p);
  CHECK(left_unitor(p) == identity(p));
  CHECK(right_unitor(p) == identity(p));
}

TEST_CASE("associator coherence") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const Instance inst = t % 2 ? Instance::sets() : Instance::modules();
    Quiver q = random_quiver(rng, n, inst), p = random_quiver(rng, n, inst), r = random_quiver(rng, n, inst),
           s = random_quiver(rng, n, inst);
    auto a = associator(q, p, r);
    CHECK(is_iso(a));
    // Pentagon.
    auto lhs = compose(associator(q, p, qtensor_object(r, s)), associator(qtensor_object(q, p), r, s));
    auto rhs = compose(qtensor(identity(q), associator(p, r, s)),
                       compose(associator(q, qtensor_object(p, r), s), qtensor(associator(q, p, r), identity(s))));
    CHECK(lhs == rhs);
    // Triangle.
    Quiver u = qunit(q.vertices(), inst);
    CHECK(compose(qtensor(identity(q), left_unitor(p)), associator(q, u, p)) ==
          qtensor(right_unitor(q), identity(p)));
    // Naturality in each variable.
    auto f = random_endo(rng, q), g = random_endo(rng, p), h = random_endo(rng, r);
    CHECK(compose(a, qtensor(qtensor(f, g), h)) == compose(qtensor(f, qtensor(g, h)), a));
  }
}

TEST_CASE("pushforward and pullback") {
  std::vector<Object> ones(4, Object::module(1));
  Quiver q(names(2), Instance::modules(), ones);
  CHECK(pushforward(identity_map(q.vertices()), q) == q);
  auto t = pushforward(terminal_vertex_map(2), q);
  CHECK(t.vertex_count() == 1);
  CHECK(t(0, 0).size() == 4);

  Quiver one(names(1), Instance::sets(), {Object::set(3)});
  auto id1 = identity_map(one.vertices());
  CHECK(adjunction_unit(id1, one) == identity(one));

  VertexMap constant{{0, 0, 0}, names(2)};
  auto pb = pullback(constant, q, names(3));
  for (const auto& c : pb.components()) CHECK(c == q(0, 0));
  CHECK(pullback(identity_map(q.vertices()), q, q.vertices()) == q);
}

TEST_CASE("adjunction triangle identities") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
    const Instance inst = t % 2 ? Instance::sets() : Instance::modules(Field::prime(3));
    auto f = random_vertex_map(rng, n, m);
    Quiver q = random_quiver(rng, n, inst);
    Quiver r = random_quiver(rng, m, inst);
    Quiver fq = pushforward(f, q);
    auto first = compose(adjunction_counit(f, fq, q.vertices()), pushforward(f, adjunction_unit(f, q)));
    CHECK(first == identity(fq));
    Quiver pr = pullback(f, r, q.vertices());
    auto second = compose(pullback(f, adjunction_counit(f, r, q.vertices()), q.vertices()), adjunction_unit(f, pr));
    CHECK(second == identity(pr));
  }
}

TEST_CASE("colax structure of pushforward") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 2;
    const Instance inst = t % 2 ? Instance::sets() : Instance::modules();
    auto f = random_vertex_map(rng, n, m);
    Quiver q = random_quiver(rng, n, inst), p = random_quiver(rng, n, inst), r = random_quiver(rng, n, inst);
    auto c_qp = pushforward_colax(f, q, p);
    CHECK(c_qp.source() == pushforward(f, qtensor_object(q, p)));

    // Coassociativity against the associators on both sides.
    auto fq = pushforward(f, q), fp = pushforward(f, p), fr = pushforward(f, r);
    auto lhs = compose(associator(fq, fp, fr),
                       compose(qtensor(c_qp, identity(fr)), pushforward_colax(f, qtensor_object(q, p), r)));
    auto rhs = compose(qtensor(identity(fq), pushforward_colax(f, p, r)),
                       compose(pushforward_colax(f, q, qtensor_object(p, r)), pushforward(f, associator(q, p, r))));
    CHECK(lhs == rhs);

    // Counitality.
    Quiver us = qunit(q.vertices(), inst);
    auto unit_t = pushforward_unit(f, q.vertices(), inst);
    auto left = compose(left_unitor(fq), compose(qtensor(unit_t, identity(fq)), pushforward_colax(f, us, q)));
    CHECK(left == pushforward(f, left_unitor(q)));
    auto right = compose(right_unitor(fq), compose(qtensor(identity(fq), unit_t), pushforward_colax(f, q, us)));
    CHECK(right == pushforward(f, right_unitor(q)));

    // Naturality.
    auto g = random_endo(rng, q), h = random_endo(rng, p);
    CHECK(compose(c_qp, pushforward(f, qtensor(g, h))) ==
          compose(qtensor(pushforward(f, g), pushforward(f, h)), c_qp));

    // Lax structure of pullback: associativity.
    Quiver a = random_quiver(rng, m, inst), b = random_quiver(rng, m, inst), c = random_quiver(rng, m, inst);
    const auto& sv = q.vertices();
    auto fa = pullback(f, a, sv), fb = pullback(f, b, sv), fc = pullback(f, c, sv);
    auto l2 = compose(pullback(f, associator(a, b, c), sv),
                      compose(pullback_lax(f, qtensor_object(a, b), c, sv), qtensor(pullback_lax(f, a, b, sv), identity(fc))));
    auto r2 = compose(pullback_lax(f, a, qtensor_object(b, c), sv),
                      compose(qtensor(identity(fa), pullback_lax(f, b, c, sv)), associator(fa, fb, fc)));
    CHECK(l2 == r2);
    auto lu = compose(pullback(f, left_unitor(a), sv),
                      compose(pullback_lax(f, qunit(a.vertices(), inst), a, sv), qtensor(pullback_unit(f, sv, inst), identity(fa))));
    CHECK(lu == left_unitor(fa));
  }
}
