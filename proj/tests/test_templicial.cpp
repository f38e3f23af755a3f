#include <doctest.h>

#include <random>

#include "templ/nerve.hpp"
#include "templ/templicial.hpp"

using namespace templ;
using quiver::QuiverMorphism;
using vcat::Instance;
using vcat::Morphism;

namespace {

// A random invertible matrix over the field, by rejection.
Matrix random_invertible(std::mt19937_64& rng, std::size_t n, Field field) {
  while (true) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<long>(rng() % 5) - 2);
    if (rank(m) == n) return m;
  }
}

std::vector<QuiverMorphism> random_basis_change(std::mt19937_64& rng, const TruncatedTemplicial& x) {
  std::vector<QuiverMorphism> phi;
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    std::vector<Morphism> comps;
    for (const auto& c : x.level(n).components())
      comps.push_back(Morphism::linear(c, c, random_invertible(rng, c.size(), c.field())));
    phi.emplace_back(x.level(n), x.level(n), comps);
  }
  return phi;
}

}  // namespace

TEST_CASE("discrete templicial objects") {
  for (auto inst : {Instance::sets(), Instance::modules()}) {
    auto x = discrete_templicial({"a", "b"}, inst, 3);
    CHECK(check_templicial(x).passed());
    CHECK(check_templicial_morphism(identity_morphism(x), x, x).passed());
  }
}

TEST_CASE("counit must be invertible") {
  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2);
  REQUIRE(check_templicial(x).passed());
  auto eps = x.data.counit.components();
  eps[0] = Morphism::linear(eps[0].source(), eps[0].target(), Matrix::from_rows({{0}}));
  x.data.counit = QuiverMorphism(x.data.counit.source(), x.data.counit.target(), eps);
  Report r = check_templicial(x);
  CHECK(r.has_failure("strong-unitality"));
}

TEST_CASE("zeroing a component breaks naturality") {
  auto c = nerve::walking_arrow(Instance::modules());
  auto x = nerve::nerve_enriched(c, 2);
  auto m = nerve::nerve_functor(nerve::identity_functor(c), c, c, 2);
  REQUIRE(check_templicial_morphism(m, x, x).passed());
  auto comps = m.components[1].components();
  comps[1] = vcat::zero_map(comps[1].source(), comps[1].target());
  m.components[1] = QuiverMorphism(m.components[1].source(), m.components[1].target(), comps);
  Report r = check_templicial_morphism(m, x, x);
  CHECK(r.has_failure("morphism-face"));
}

TEST_CASE("composition of templicial morphisms") {
  auto c = nerve::walking_arrow(Instance::sets());
  auto t = nerve::terminal_category(Instance::sets());
  auto x = nerve::nerve_enriched(c, 3);
  auto y = nerve::nerve_enriched(t, 3);
  nerve::EnrichedFunctor to_t{quiver::terminal_vertex_map(2), {}};
  for (const auto& h : c.homs) to_t.homs.push_back(vcat::terminal_map(h));
  auto alpha = nerve::nerve_functor(to_t, c, t, 3);
  auto id = identity_morphism(x);
  auto composite = compose(alpha, id, x);
  CHECK(check_templicial_morphism(composite, x, y).passed());
  CHECK(composite == alpha);
  auto after = compose(identity_morphism(y), alpha, x);
  CHECK(after == alpha);
  CHECK_FALSE(is_iso(alpha));
  CHECK(is_iso(id));
}

TEST_CASE("iso search finds witnesses") {
  std::mt19937_64 rng(11);
  for (auto inst : {Instance::sets(), Instance::modules(), Instance::modules(Field::prime(3))}) {
    auto x = nerve::nerve_enriched(nerve::walking_arrow(inst), 2);
    auto self = templicial_iso_check(x, x);
    REQUIRE(self.status == IsoSearchResult::Status::witness);
    CHECK(check_templicial_morphism(*self.witness, x, x).passed());

    auto swapped = permute_vertices(x, {1, 0});
    REQUIRE(check_templicial(swapped).passed());
    auto res = templicial_iso_check(x, swapped);
    REQUIRE(res.status == IsoSearchResult::Status::witness);
    CHECK(res.witness->vertex_map.images == std::vector<std::size_t>{1, 0});
  }
  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2);
  for (int t = 0; t < 5; ++t) {
    auto z = transport(x, random_basis_change(rng, x));
    REQUIRE(check_templicial(z).passed());
    auto res = templicial_iso_check(x, z);
    CHECK(res.status == IsoSearchResult::Status::witness);
  }
}

TEST_CASE("iso search reports obstructions") {
  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2);
  auto y = nerve::nerve_enriched(nerve::discrete_category(2, Instance::modules()), 2);
  auto res = templicial_iso_check(x, y);
  CHECK(res.status == IsoSearchResult::Status::obstruction);
  CHECK_FALSE(res.witness);

  auto one = nerve::nerve_enriched(nerve::terminal_category(Instance::sets()), 2);
  CHECK(templicial_iso_check(x, linearize(one, Field{})).status == IsoSearchResult::Status::obstruction);
}

TEST_CASE("linearize and restrict keep the laws") {
  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::sets()), 3);
  auto lx = linearize(x, Field::prime(5));
  CHECK(check_templicial(lx).passed());
  CHECK(lx.level(2)(0, 1).size() == x.level(2)(0, 1).size());
  auto r = restrict_window(x, 1);
  CHECK(r.truncation() == 1);
  CHECK(check_templicial(r).passed());
  CHECK(same_data(x, x));
  CHECK_FALSE(same_data(x, r));
}
