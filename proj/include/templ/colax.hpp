#pragma once

// Truncated colax monoidal functors out of the opposite of the interval
// category, generic over the target monoidal category. Two targets are used:
// the base category V (strict under the size normalization) and V-quivers on
// a fixed vertex set (explicit associator, literal unitors).
//
// Storage holds the generators only. Index conventions:
//   faces[n][j-1]      = d_j : X_n -> X_{n-1},   0 < j < n
//   degeneracies[n][i] = s_i : X_n -> X_{n+1},   0 <= i <= n < N
//   comult[k][l]       = mu_{k,l} : X_{k+l} -> X_k (x) X_l,   k + l <= N

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "templ/fint.hpp"
#include "templ/quiver.hpp"
#include "templ/report.hpp"
#include "templ/vcat.hpp"

namespace templ {

struct BaseMonoidal {
  using Object = vcat::Object;
  using Morphism = vcat::Morphism;

  vcat::Instance instance;

  Object unit() const { return vcat::unit(instance); }
  Object tensor(const Object& a, const Object& b) const { return vcat::tensor(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return vcat::tensor(f, g); }
  Morphism identity(const Object& a) const { return vcat::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return vcat::compose(g, f); }
  Morphism associator(const Object& a, const Object& b, const Object& c) const {
    return vcat::identity(vcat::tensor(vcat::tensor(a, b), c));
  }
  Morphism left_unitor(const Object& a) const { return vcat::identity(a); }
  Morphism right_unitor(const Object& a) const { return vcat::identity(a); }
  static const Object& source(const Morphism& f) { return f.source(); }
  static const Object& target(const Morphism& f) { return f.target(); }
  static std::string describe(const Morphism& f) { return vcat::describe(f); }
  static std::string locate(const Morphism&, const Morphism&) { return {}; }
};

struct QuiverMonoidal {
  using Object = quiver::Quiver;
  using Morphism = quiver::QuiverMorphism;

  std::vector<std::string> vertices;
  vcat::Instance instance;

  Object unit() const { return quiver::qunit(vertices, instance); }
  Object tensor(const Object& a, const Object& b) const { return quiver::qtensor_object(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return quiver::qtensor(f, g); }
  Morphism identity(const Object& a) const { return quiver::identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return quiver::compose(g, f); }
  Morphism associator(const Object& a, const Object& b, const Object& c) const {
    return quiver::associator(a, b, c);
  }
  Morphism left_unitor(const Object& a) const { return quiver::left_unitor(a); }
  Morphism right_unitor(const Object& a) const { return quiver::right_unitor(a); }
  static const Object& source(const Morphism& f) { return f.source(); }
  static const Object& target(const Morphism& f) { return f.target(); }
  static std::string describe(const Morphism& f) {
    return quiver::describe(f.source()) + " -> " + quiver::describe(f.target());
  }
  /// The first vertex pair where two parallel quiver morphisms differ.
  static std::string locate(const Morphism& f, const Morphism& g) {
    const std::size_t n = f.source().vertex_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!(f(a, b) == g(a, b))) return " at (" + f.source().vertices()[a] + "," + f.source().vertices()[b] + ")";
    return {};
  }
};

template <class M>
struct Colax {
  using Obj = typename M::Object;
  using Mor = typename M::Morphism;

  std::size_t truncation = 0;
  std::vector<Obj> levels;
  std::vector<std::vector<Mor>> faces;
  std::vector<std::vector<Mor>> degeneracies;
  std::vector<std::vector<Mor>> comult;
  Mor counit;

  const Mor& d(std::size_t n, std::size_t j) const { return faces.at(n).at(j - 1); }
  const Mor& s(std::size_t n, std::size_t i) const { return degeneracies.at(n).at(i); }
  const Mor& mu(std::size_t k, std::size_t l) const { return comult.at(k).at(l); }
  Mor& d(std::size_t n, std::size_t j) { return faces.at(n).at(j - 1); }
  Mor& s(std::size_t n, std::size_t i) { return degeneracies.at(n).at(i); }
  Mor& mu(std::size_t k, std::size_t l) { return comult.at(k).at(l); }

  /// Sizes the storage for truncation n; morphisms are left default.
  void allocate(std::size_t n) {
    truncation = n;
    levels.assign(n + 1, Obj{});
    faces.assign(n + 1, {});
    degeneracies.assign(n + 1, {});
    comult.assign(n + 1, {});
    for (std::size_t k = 0; k <= n; ++k) {
      if (k >= 2) faces[k].assign(k - 1, Mor{});
      if (k < n) degeneracies[k].assign(k + 1, Mor{});
      comult[k].assign(n - k + 1, Mor{});
    }
  }
};

/// X(g) for a single generator: faces go down a level, degeneracies up.
template <class M>
const typename M::Morphism& act(const Colax<M>& x, const fint::Generator& g) {
  return g.kind == fint::Generator::Kind::face ? x.d(g.level, g.index) : x.s(g.level, g.index);
}

/// X(f) : X_target -> X_source for the map represented by the word.
template <class M>
typename M::Morphism act(const M& m, const Colax<M>& x, const fint::Word& w) {
  auto acc = m.identity(x.levels.at(w.target()));
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) acc = m.compose(act(x, *it), acc);
  return acc;
}

template <class M>
typename M::Morphism act(const M& m, const Colax<M>& x, const fint::IntervalMap& f) {
  return act(m, x, fint::factorize(f));
}

namespace detail {

inline std::string at(std::initializer_list<std::pair<const char*, std::size_t>> idx) {
  std::string s;
  for (const auto& [name, v] : idx) s += (s.empty() ? "" : " ") + std::string(name) + "=" + std::to_string(v);
  return s;
}

template <class M>
bool check_shapes(const M& m, const Colax<M>& x, Report& r) {
  const std::size_t n = x.truncation;
  bool ok = x.levels.size() == n + 1 && x.faces.size() == n + 1 && x.degeneracies.size() == n + 1 &&
            x.comult.size() == n + 1;
  if (!ok) {
    r.fail("shape", "", "storage does not match the truncation");
    return false;
  }
  auto expect = [&](const typename M::Morphism& f, const typename M::Object& s, const typename M::Object& t,
                    const std::string& where) {
    bool good = M::source(f) == s && M::target(f) == t;
    r.check(good, "shape", [&] { return where; });
    ok = ok && good;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    if (x.faces[k].size() != (k >= 2 ? k - 1 : 0) || x.degeneracies[k].size() != (k < n ? k + 1 : 0) ||
        x.comult[k].size() != n - k + 1) {
      r.fail("shape", at({{"n", k}}), "wrong number of structure maps");
      return false;
    }
    for (std::size_t j = 1; j < k; ++j) expect(x.d(k, j), x.levels[k], x.levels[k - 1], "d " + at({{"n", k}, {"j", j}}));
    if (k < n)
      for (std::size_t i = 0; i <= k; ++i) expect(x.s(k, i), x.levels[k], x.levels[k + 1], "s " + at({{"n", k}, {"i", i}}));
    for (std::size_t l = 0; k + l <= n; ++l)
      expect(x.mu(k, l), x.levels[k + l], m.tensor(x.levels[k], x.levels[l]), "mu " + at({{"k", k}, {"l", l}}));
  }
  expect(x.counit, x.levels[0], m.unit(), "counit");
  return ok;
}

template <class M, class Where>
void expect_equal(Report& r, const typename M::Morphism& lhs, const typename M::Morphism& rhs, std::string_view law,
                  Where&& where) {
  r.check(lhs == rhs, law, [&] { return where() + M::locate(lhs, rhs); });
}

}  // namespace detail

/// Every checkable colax law inside the truncation window: the inner
/// simplicial identities, coassociativity, counitality and naturality of mu
/// against all pairs drawn from generators and identities.
template <class M>
Report check_colax_laws(const M& m, const Colax<M>& x) {
  using detail::at;
  Report r;
  if (!detail::check_shapes(m, x, r)) return r;
  const std::size_t N = x.truncation;

  for (std::size_t n = 3; n <= N; ++n)
    for (std::size_t j = 2; j < n; ++j)
      for (std::size_t i = 1; i < j; ++i)
        detail::expect_equal<M>(r, m.compose(x.d(n - 1, i), x.d(n, j)), m.compose(x.d(n - 1, j - 1), x.d(n, i)),
                                "face-face", [&] { return at({{"n", n}, {"i", i}, {"j", j}}); });

  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        detail::expect_equal<M>(r, m.compose(x.s(n + 1, i), x.s(n, j)), m.compose(x.s(n + 1, j + 1), x.s(n, i)),
                                "degeneracy-degeneracy", [&] { return at({{"n", n}, {"i", i}, {"j", j}}); });

  for (std::size_t n = 0; n + 1 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 1; i <= n; ++i) {
        auto lhs = m.compose(x.d(n + 1, i), x.s(n, j));
        typename M::Morphism rhs;
        if (i < j)
          rhs = m.compose(x.s(n - 1, j - 1), x.d(n, i));
        else if (i == j || i == j + 1)
          rhs = m.identity(x.levels[n]);
        else
          rhs = m.compose(x.s(n - 1, j), x.d(n, i - 1));
        detail::expect_equal<M>(r, lhs, rhs, "face-degeneracy", [&] { return at({{"n", n}, {"i", i}, {"j", j}}); });
      }

  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      for (std::size_t q = 0; k + l + q <= N; ++q) {
        auto lhs = m.compose(m.associator(x.levels[k], x.levels[l], x.levels[q]),
                             m.compose(m.tensor(x.mu(k, l), m.identity(x.levels[q])), x.mu(k + l, q)));
        auto rhs = m.compose(m.tensor(m.identity(x.levels[k]), x.mu(l, q)), x.mu(k, l + q));
        detail::expect_equal<M>(r, lhs, rhs, "coassociativity", [&] { return at({{"k", k}, {"l", l}, {"m", q}}); });
      }

  for (std::size_t n = 0; n <= N; ++n) {
    auto id = m.identity(x.levels[n]);
    detail::expect_equal<M>(r, m.compose(m.left_unitor(x.levels[n]), m.compose(m.tensor(x.counit, id), x.mu(0, n))),
                            id, "left-counit", [&] { return at({{"n", n}}); });
    detail::expect_equal<M>(r, m.compose(m.right_unitor(x.levels[n]), m.compose(m.tensor(id, x.counit), x.mu(n, 0))),
                            id, "right-counit", [&] { return at({{"n", n}}); });
  }

  // Naturality: mu_{k',l'} . X(f + g) = (X f (x) X g) . mu_{k,l} for f: [k'] -> [k], g: [l'] -> [l].
  auto maps_into = [&](std::size_t k) {
    std::vector<fint::IntervalMap> out{fint::IntervalMap::identity(k)};
    for (std::size_t j = 1; j < k; ++j) out.push_back(fint::IntervalMap::coface(k, j));
    for (std::size_t i = 0; i <= k; ++i) out.push_back(fint::IntervalMap::codegeneracy(k, i));
    return out;
  };
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      for (const auto& f : maps_into(k))
        for (const auto& g : maps_into(l)) {
          if (f.is_identity() && g.is_identity()) continue;
          const std::size_t k2 = f.source(), l2 = g.source();
          if (k2 + l2 > N) continue;
          auto lhs = m.compose(x.mu(k2, l2), act(m, x, fint::sum(f, g)));
          auto rhs = m.compose(m.tensor(act(m, x, f), act(m, x, g)), x.mu(k, l));
          detail::expect_equal<M>(r, lhs, rhs, "naturality", [&] {
            return at({{"k", k}, {"l", l}}) + " f=" + fint::to_string(f) + " g=" + fint::to_string(g);
          });
        }
  return r;
}

/// Levelwise maps alpha_n : X_n -> Y_n commuting with the generators, mu and the counit.
template <class M>
Report check_colax_morphism(const M& m, const std::vector<typename M::Morphism>& alpha, const Colax<M>& x,
                            const Colax<M>& y) {
  using detail::at;
  Report r;
  const std::size_t N = x.truncation;
  if (y.truncation != N || alpha.size() != N + 1) {
    r.fail("morphism-shape", "", "truncations or component counts differ");
    return r;
  }
  for (std::size_t n = 0; n <= N; ++n)
    if (!r.check(M::source(alpha[n]) == x.levels[n] && M::target(alpha[n]) == y.levels[n], "morphism-shape",
                 [&] { return at({{"n", n}}); }))
      return r;
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j < n; ++j)
      detail::expect_equal<M>(r, m.compose(alpha[n - 1], x.d(n, j)), m.compose(y.d(n, j), alpha[n]), "morphism-face",
                              [&] { return at({{"n", n}, {"j", j}}); });
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      detail::expect_equal<M>(r, m.compose(alpha[n + 1], x.s(n, i)), m.compose(y.s(n, i), alpha[n]),
                              "morphism-degeneracy", [&] { return at({{"n", n}, {"i", i}}); });
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      detail::expect_equal<M>(r, m.compose(m.tensor(alpha[k], alpha[l]), x.mu(k, l)), m.compose(y.mu(k, l), alpha[k + l]),
                              "morphism-comult", [&] { return at({{"k", k}, {"l", l}}); });
  detail::expect_equal<M>(r, m.compose(y.counit, alpha[0]), x.counit, "morphism-counit", [] { return std::string{}; });
  return r;
}

/// The same data cut down to a smaller window.
template <class M>
Colax<M> restrict_window(const Colax<M>& x, std::size_t n) {
  if (n > x.truncation) throw std::invalid_argument("cannot restrict to a larger window");
  Colax<M> out;
  out.allocate(n);
  for (std::size_t k = 0; k <= n; ++k) {
    out.levels[k] = x.levels[k];
    for (std::size_t j = 1; j < k; ++j) out.d(k, j) = x.d(k, j);
    if (k < n)
      for (std::size_t i = 0; i <= k; ++i) out.s(k, i) = x.s(k, i);
    for (std::size_t l = 0; k + l <= n; ++l) out.mu(k, l) = x.mu(k, l);
  }
  out.counit = x.counit;
  return out;
}

}  // namespace templ
