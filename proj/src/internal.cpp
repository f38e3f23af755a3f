#include "templ/internal.hpp"

namespace templ {

void TruncatedSimplicial::allocate(std::size_t n) {
  truncation = n;
  levels.assign(n + 1, vcat::Object{});
  faces.assign(n + 1, {});
  degeneracies.assign(n + 1, {});
  for (std::size_t k = 0; k <= n; ++k) {
    if (k >= 1) faces[k].assign(k + 1, vcat::Morphism{});
    if (k < n) degeneracies[k].assign(k + 1, vcat::Morphism{});
  }
}

Report check_colax(const TruncatedColax& x) {
  if (x.levels.empty()) {
    Report r;
    r.fail("shape", "", "no levels");
    return r;
  }
  return check_colax_laws(base_monoidal(x), x);
}

Report check_based(const BasedColax& x) {
  Report r = check_colax(x.underlying);
  if (!r.passed()) return r;
  const auto inst = x.instance();
  const auto free = vcat::free_comonoid(inst, x.base.size());
  const auto& phi = x.base_iso;
  if (!r.check(phi.source() == x.underlying.levels[0] && phi.target() == free.carrier, "base-iso-shape")) return r;
  r.check(vcat::is_iso(phi), "base-iso-invertible");
  Report c = vcat::check_comonoid_morphism(phi, level_zero_comonoid(x.underlying), free);
  for (const auto& t : c.tallies())
    r.check(t.failed == 0, "comonoid-intertwine", [&] { return t.law; });
  return r;
}

Report check_simplicial(const TruncatedSimplicial& x) {
  Report r;
  const std::size_t N = x.truncation;
  if (x.levels.size() != N + 1) {
    r.fail("shape", "", "storage does not match the truncation");
    return r;
  }
  for (const auto& l : x.levels)
    if (l.kind() != vcat::Kind::finset) throw vcat::InstanceError("simplicial objects need a cartesian base");
  using detail::at;
  bool shapes = true;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n >= 1)
      for (std::size_t j = 0; j <= n; ++j)
        shapes &= r.check(x.d(n, j).source() == x.levels[n] && x.d(n, j).target() == x.levels[n - 1], "shape",
                          [&] { return "d " + at({{"n", n}, {"j", j}}); });
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i)
        shapes &= r.check(x.s(n, i).source() == x.levels[n] && x.s(n, i).target() == x.levels[n + 1], "shape",
                          [&] { return "s " + at({{"n", n}, {"i", i}}); });
  }
  if (!shapes) return r;
  using vcat::compose;
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        r.check(compose(x.d(n - 1, i), x.d(n, j)) == compose(x.d(n - 1, j - 1), x.d(n, i)), "face-face",
                [&] { return at({{"n", n}, {"i", i}, {"j", j}}); });
  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        r.check(compose(x.s(n + 1, i), x.s(n, j)) == compose(x.s(n + 1, j + 1), x.s(n, i)), "degeneracy-degeneracy",
                [&] { return at({{"n", n}, {"i", i}, {"j", j}}); });
  for (std::size_t n = 0; n + 1 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        auto lhs = compose(x.d(n + 1, i), x.s(n, j));
        vcat::Morphism rhs;
        if (i < j)
          rhs = compose(x.s(n - 1, j - 1), x.d(n, i));
        else if (i == j || i == j + 1)
          rhs = vcat::identity(x.levels[n]);
        else
          rhs = compose(x.s(n - 1, j), x.d(n, i - 1));
        r.check(lhs == rhs, "face-degeneracy", [&] { return at({{"n", n}, {"i", i}, {"j", j}}); });
      }
  return r;
}

Report check_based_morphism(const BasedColaxMorphism& m, const BasedColax& x, const BasedColax& y) {
  Report r = check_colax_morphism(base_monoidal(x.underlying), m.components, x.underlying, y.underlying);
  if (!r.passed()) return r;
  const auto& f = m.vertex_map;
  if (!r.check(f.source_count() == x.base.size() && f.target_count() == y.base.size(), "base-map-shape")) return r;
  const auto inst = x.instance();
  auto ff = vcat::structural(vcat::free_object(inst, x.base.size()), vcat::free_object(inst, y.base.size()), f.images);
  r.check(vcat::compose(y.base_iso, m.components[0]) == vcat::compose(ff, x.base_iso), "base-compat");
  return r;
}

vcat::Comonoid level_zero_comonoid(const TruncatedColax& x) { return {x.levels.at(0), x.mu(0, 0), x.counit}; }

TruncatedColax terminal_colax(vcat::Instance inst, std::size_t truncation) {
  TruncatedColax x;
  x.allocate(truncation);
  const auto u = vcat::unit(inst);
  const auto id = vcat::identity(u);
  for (std::size_t k = 0; k <= truncation; ++k) {
    x.levels[k] = u;
    for (auto& f : x.faces[k]) f = id;
    for (auto& s : x.degeneracies[k]) s = id;
    for (auto& m : x.comult[k]) m = id;
  }
  x.counit = id;
  return x;
}

TruncatedSimplicial restrict_window(const TruncatedSimplicial& x, std::size_t n) {
  if (n > x.truncation) throw std::invalid_argument("cannot restrict to a larger window");
  TruncatedSimplicial out;
  out.allocate(n);
  out.base = x.base;
  for (std::size_t k = 0; k <= n; ++k) {
    out.levels[k] = x.levels[k];
    if (k >= 1) out.faces[k] = x.faces[k];
    if (k < n) out.degeneracies[k] = x.degeneracies[k];
  }
  return out;
}

bool same_data(const TruncatedColax& x, const TruncatedColax& y) {
  return x.truncation == y.truncation && x.levels == y.levels && x.faces == y.faces &&
         x.degeneracies == y.degeneracies && x.comult == y.comult && x.counit == y.counit;
}

}  // namespace templ
