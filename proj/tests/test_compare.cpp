#include <doctest.h>

#include <map>

#include "templ/compare.hpp"
#include "templ/nerve.hpp"

using namespace templ;
using namespace templ::compare;
using vcat::Instance;
using vcat::Morphism;
using vcat::Object;

namespace {

using Descriptor = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

// All (object sequence, arrow tuple) pairs of length n, in the given sequence order.
std::vector<Descriptor> descriptors(const nerve::FiniteCategory& c, const std::vector<std::vector<std::size_t>>& seqs) {
  std::vector<Descriptor> out;
  for (const auto& s : seqs) {
    std::vector<std::size_t> sizes;
    std::size_t total = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
      sizes.push_back(c.hom(s[i - 1], s[i]).size());
      total *= sizes.back();
    }
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<std::size_t> arrows(sizes.size());
      std::size_t rest = k;
      for (std::size_t i = sizes.size(); i-- > 0;) {
        arrows[i] = rest % sizes[i];
        rest /= sizes[i];
      }
      out.push_back({s, arrows});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_sequences(std::size_t objects, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(len, 0);
  while (true) {
    out.push_back(cur);
    std::size_t p = len;
    while (p > 0 && cur[p - 1] + 1 == objects) cur[--p] = 0;
    if (p == 0) break;
    ++cur[p - 1];
  }
  return out;
}

std::vector<std::vector<std::size_t>> blocked_sequences(std::size_t objects, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < objects; ++a)
    for (std::size_t b = 0; b < objects; ++b)
      for (const auto& p : nerve::inner_paths(objects, n, a, b)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("collapse of nerves") {
  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::sets()), 3);
  auto y = collapse_c(x);
  CHECK(check_based(y).passed());
  CHECK(y.underlying.levels[0].size() == 2);
  CHECK(y.underlying.levels[1].size() == 3);
  CHECK(y.underlying.levels[2].size() == 4);

  auto lin = nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2);
  auto ly = collapse_c(lin);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(ly.underlying.levels[n].size() == lin.level(n).total_size());

  auto one = nerve::nerve_enriched(nerve::unit_algebra(), 2);
  auto oy = collapse_c(one);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(oy.underlying.levels[n] == one.level(n)(0, 0));
  CHECK(oy.underlying.mu(1, 1) == one.data.mu(1, 1)(0, 0));

  auto bad = lin;
  auto eps = bad.data.counit.components();
  eps[0] = vcat::zero_map(eps[0].source(), eps[0].target());
  bad.data.counit = quiver::QuiverMorphism(bad.level(0), bad.data.counit.target(), eps);
  CHECK_THROWS_AS(collapse_c(bad), std::invalid_argument);
}

TEST_CASE("collapse of morphisms") {
  auto c = nerve::walking_arrow(Instance::sets());
  auto x = nerve::nerve_enriched(c, 3);
  auto id = collapse_c_morphism(identity_morphism(x), x, x);
  auto y = collapse_c(x);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(id.components[n] == vcat::identity(y.underlying.levels[n]));

  auto disc = discrete_templicial({"a", "b"}, Instance::modules(), 2);
  auto point = discrete_templicial({"*"}, Instance::modules(), 2);
  TemplicialMorphism squash{quiver::terminal_vertex_map(2), {}};
  for (std::size_t n = 0; n <= 2; ++n) {
    auto tgt = quiver::pullback(squash.vertex_map, point.level(n), disc.vertices);
    std::vector<Morphism> comps;
    for (std::size_t ab = 0; ab < 4; ++ab)
      comps.push_back(ab % 3 == 0 ? Morphism::linear(disc.level(n).components()[ab], tgt.components()[ab],
                                                     Matrix::identity(1))
                                  : vcat::zero_map(disc.level(n).components()[ab], tgt.components()[ab]));
    squash.components.emplace_back(disc.level(n), tgt, comps);
  }
  REQUIRE(check_templicial_morphism(squash, disc, point).passed());
  auto cs = collapse_c_morphism(squash, disc, point);
  CHECK(cs.components[0] == vcat::codiagonal(Object::module(1), 2));
  CHECK(check_based_morphism(cs, collapse_c(disc), collapse_c(point)).passed());

  // Nerve of the functor to the terminal category, collapsed.
  auto t = nerve::terminal_category(Instance::sets());
  nerve::EnrichedFunctor bang{quiver::terminal_vertex_map(2), {}};
  for (const auto& h : c.homs) bang.homs.push_back(vcat::terminal_map(h));
  auto m = nerve::nerve_functor(bang, c, t, 3);
  auto tx = nerve::nerve_enriched(t, 3);
  CHECK(check_based_morphism(collapse_c_morphism(m, x, tx), y, collapse_c(tx)).passed());
}

TEST_CASE("decomposing morphisms") {
  for (auto inst : {Instance::sets(), Instance::modules()}) {
    auto a = Object::of(inst, 3);
    for (std::size_t j = 0; j < 3; ++j) CHECK(is_decomposing(vcat::coprojection(a, 3, j), 3).decomposing());
  }
  auto a = Object::module(2);
  auto sum = vcat::add(vcat::coprojection(a, 2, 0), vcat::coprojection(a, 2, 1));
  auto w = is_decomposing(sum, 2);
  CHECK_FALSE(w.retracts);
  CHECK_FALSE(w.decomposing());
  CHECK_THROWS_AS(is_decomposing(vcat::identity(a), 2), ShapeError);

  auto iota = vcat::coprojection(a, 3, 1);
  auto s = split_equalizer_witness(iota, 3, 1);
  CHECK(s.verified);
  CHECK(s.section == vcat::identity(a));
  CHECK(s.equalizer.size() == 2);
  CHECK(combined_split_check(iota, 3).passed());
  CHECK_THROWS_AS(split_equalizer_witness(vcat::coprojection(Object::set(2), 2, 0), 2, 0), vcat::InstanceError);
}

TEST_CASE("mu_0n0 on collapsed nerves") {
  auto one = collapse_c(discrete_templicial({"*"}, Instance::sets(), 1));
  CHECK(mu_0n0(one, 0) == vcat::identity(one.underlying.levels[0]));

  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2);
  auto y = collapse_c(x);
  const auto t = quiver::terminal_vertex_map(2);
  for (std::size_t n = 0; n <= 2; ++n) {
    auto m = mu_0n0(y, n);
    CHECK(m == mu_0n0_alternative(y, n));
    CHECK(is_decomposing(m, 4).decomposing());
    // The (a,b) summand lands in copy (a,b).
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        auto inc = quiver::pushforward_coprojection(t, x.level(n), a, b);
        auto expected = vcat::compose(vcat::coprojection(y.underlying.levels[n], 4, a * 2 + b), inc);
        CHECK(vcat::compose(m, inc) == expected);
      }
  }
}

TEST_CASE("decomposition of a collapsed nerve") {
  auto x = nerve::nerve_enriched(nerve::walking_arrow(Instance::sets()), 2);
  auto y = collapse_c(x);
  auto d = decompose_d(y);
  CHECK(check_templicial(d).passed());
  CHECK(d.level(1)(0, 1).size() == 1);
  CHECK(d.level(1)(0, 0).size() == 1);
  CHECK(d.level(1)(1, 1).size() == 1);
  CHECK(d.level(1)(1, 0).size() == 0);
  CHECK(check_decomposition(y).passed());

  auto lin = collapse_c(nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2));
  Report r = check_decomposition(lin);
  CHECK(r.passed());
  bool saw_split = false;
  for (const auto& t : r.tallies()) saw_split = saw_split || (t.law == "split-equalizer" && t.checked > 0);
  CHECK(saw_split);

  auto single = collapse_c(nerve::nerve_enriched(nerve::unit_algebra(), 2));
  auto sd = decompose_d(single);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(sd.level(n)(0, 0) == single.underlying.levels[n]);
  CHECK(sd.data.mu(1, 1)(0, 0) == single.underlying.mu(1, 1));
}

TEST_CASE("round trip through c and d") {
  std::vector<TruncatedTemplicial> inputs{
      discrete_templicial({"a", "b"}, Instance::sets(), 2),
      discrete_templicial({"a", "b"}, Instance::modules(), 2),
      nerve::nerve_enriched(nerve::walking_arrow(Instance::sets()), 2),
      nerve::nerve_enriched(nerve::walking_arrow(Instance::modules()), 2),
      nerve::nerve_enriched(nerve::discrete_category(3, Instance::sets()), 2),
  };
  for (const auto& x : inputs) {
    auto res = roundtrip_theorem_check(x);
    CHECK_MESSAGE(res.report.passed(), res.report.summary());
    REQUIRE(res.unit);
    CHECK(is_iso(*res.unit));
    REQUIRE(res.counit);
  }
  auto disc = roundtrip_theorem_check(inputs[0]);
  CHECK(*disc.unit == identity_morphism(inputs[0]));
}

TEST_CASE("forgetting the nerve agrees with the classical nerve") {
  for (const auto& c : {nerve::walking_arrow(Instance::sets()), nerve::ordinal(2), nerve::discrete_category(2, Instance::sets())}) {
    const std::size_t N = 3;
    auto classical = nerve::nerve_classical(c, N);
    auto forgotten = nerve::leinster_backward(collapse_c(nerve::nerve_enriched(c, N)).underlying);
    REQUIRE(check_simplicial(forgotten).passed());
    std::vector<std::vector<std::size_t>> perm(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      auto lhs = descriptors(c, all_sequences(c.size(), n + 1));
      auto rhs = descriptors(c, blocked_sequences(c.size(), n));
      REQUIRE(lhs.size() == rhs.size());
      std::map<Descriptor, std::size_t> where;
      for (std::size_t i = 0; i < rhs.size(); ++i) where[rhs[i]] = i;
      for (const auto& dsc : lhs) perm[n].push_back(where.at(dsc));
    }
    for (std::size_t n = 1; n <= N; ++n)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t e = 0; e < classical.levels[n].size(); ++e)
          CHECK(forgotten.d(n, j).table()[perm[n][e]] == perm[n - 1][classical.d(n, j).table()[e]]);
    for (std::size_t n = 0; n < N; ++n)
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t e = 0; e < classical.levels[n].size(); ++e)
          CHECK(forgotten.s(n, i).table()[perm[n][e]] == perm[n + 1][classical.s(n, i).table()[e]]);
  }
}
