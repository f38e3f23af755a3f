#include "templ/nerve.hpp"

#include <algorithm>
#include <map>

namespace templ::nerve {

using quiver::Quiver;
using quiver::QuiverMorphism;
using vcat::Morphism;
using vcat::Object;

FiniteCategory finite_category(std::vector<std::string> objects, const std::vector<std::size_t>& hom_sizes,
                               const std::function<std::size_t(std::size_t, std::size_t, std::size_t, std::size_t,
                                                               std::size_t)>& compose,
                               const std::vector<std::size_t>& identities) {
  const std::size_t n = objects.size();
  if (hom_sizes.size() != n * n || identities.size() != n)
    throw std::invalid_argument("finite_category: size mismatch");
  FiniteCategory c;
  c.objects = std::move(objects);
  c.instance = vcat::Instance::sets();
  for (auto s : hom_sizes) c.homs.push_back(Object::set(s));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        const std::size_t sb = hom_sizes[a * n + b], sd = hom_sizes[b * n + d];
        std::vector<std::size_t> t(sb * sd);
        for (std::size_t f = 0; f < sb; ++f)
          for (std::size_t g = 0; g < sd; ++g) t[f * sd + g] = compose(a, b, d, f, g);
        c.composition.push_back(
            Morphism::function(vcat::tensor(c.homs[a * n + b], c.homs[b * n + d]), c.homs[a * n + d], t));
      }
  for (std::size_t a = 0; a < n; ++a)
    c.units.push_back(Morphism::function(Object::set(1), c.homs[a * n + a], {identities[a]}));
  return c;
}

Report check_category(const EnrichedCategory& c) {
  using detail::at;
  Report r;
  const std::size_t n = c.size();
  if (!r.check(c.homs.size() == n * n && c.composition.size() == n * n * n && c.units.size() == n, "shape"))
    return r;
  const Object u = vcat::unit(c.instance);
  for (std::size_t a = 0; a < n; ++a) {
    if (!r.check(c.unit(a).source() == u && c.unit(a).target() == c.hom(a, a), "shape",
                 [&] { return "unit " + c.objects[a]; }))
      return r;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        if (!r.check(c.comp(a, b, d).source() == vcat::tensor(c.hom(a, b), c.hom(b, d)) &&
                         c.comp(a, b, d).target() == c.hom(a, d),
                     "shape", [&] { return "composition " + at({{"a", a}, {"b", b}, {"c", d}}); }))
          return r;
  }
  using vcat::compose;
  using vcat::identity;
  using vcat::tensor;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto id = identity(c.hom(a, b));
      r.check(compose(c.comp(a, a, b), tensor(c.unit(a), id)) == id, "left-unit",
              [&] { return at({{"a", a}, {"b", b}}); });
      r.check(compose(c.comp(a, b, b), tensor(id, c.unit(b))) == id, "right-unit",
              [&] { return at({{"a", a}, {"b", b}}); });
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t e = 0; e < n; ++e)
          r.check(compose(c.comp(a, d, e), tensor(c.comp(a, b, d), identity(c.hom(d, e)))) ==
                      compose(c.comp(a, b, e), tensor(identity(c.hom(a, b)), c.comp(b, d, e))),
                  "associativity", [&] { return at({{"a", a}, {"b", b}, {"c", d}, {"d", e}}); });
    }
  return r;
}

Report check_functor(const EnrichedFunctor& f, const EnrichedCategory& c, const EnrichedCategory& d) {
  using detail::at;
  Report r;
  const std::size_t n = c.size(), m = d.size();
  if (!r.check(f.object_map.source_count() == n && f.object_map.target_count() == m && f.homs.size() == n * n &&
                   c.instance == d.instance,
               "functor-shape"))
    return r;
  for (auto v : f.object_map.images)
    if (!r.check(v < m, "functor-shape")) return r;
  const auto& F = f.object_map;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!r.check(f.homs[a * n + b].source() == c.hom(a, b) && f.homs[a * n + b].target() == d.hom(F(a), F(b)),
                   "functor-shape", [&] { return at({{"a", a}, {"b", b}}); }))
        return r;
  for (std::size_t a = 0; a < n; ++a) {
    r.check(vcat::compose(f.homs[a * n + a], c.unit(a)) == d.unit(F(a)), "functor-unit",
            [&] { return c.objects[a]; });
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t e = 0; e < n; ++e)
        r.check(vcat::compose(f.homs[a * n + e], c.comp(a, b, e)) ==
                    vcat::compose(d.comp(F(a), F(b), F(e)), vcat::tensor(f.homs[a * n + b], f.homs[b * n + e])),
                "functor-composition", [&] { return at({{"a", a}, {"b", b}, {"c", e}}); });
  }
  return r;
}

EnrichedFunctor identity_functor(const EnrichedCategory& c) {
  EnrichedFunctor f{quiver::identity_map(c.objects), {}};
  for (const auto& h : c.homs) f.homs.push_back(vcat::identity(h));
  return f;
}

namespace {

EnrichedCategory from_sets(const FiniteCategory& c, vcat::Instance inst) {
  return inst.kind == vcat::Kind::finset ? c : linearize(c, inst.field);
}

}  // namespace

EnrichedCategory walking_arrow(vcat::Instance inst) {
  auto c = finite_category({"0", "1"}, {1, 1, 0, 1}, [](auto, auto, auto, auto, auto) { return std::size_t{0}; },
                           {0, 0});
  return from_sets(c, inst);
}

EnrichedCategory terminal_category(vcat::Instance inst) {
  auto c = finite_category({"*"}, {1}, [](auto, auto, auto, auto, auto) { return std::size_t{0}; }, {0});
  return from_sets(c, inst);
}

EnrichedCategory discrete_category(std::size_t n, vcat::Instance inst) {
  std::vector<std::string> names;
  std::vector<std::size_t> sizes(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    sizes[a * n + a] = 1;
  }
  auto c = finite_category(names, sizes, [](auto, auto, auto, auto, auto) { return std::size_t{0}; },
                           std::vector<std::size_t>(n, 0));
  return from_sets(c, inst);
}

EnrichedCategory unit_algebra(Field field) { return terminal_category(vcat::Instance::modules(field)); }

FiniteCategory ordinal(std::size_t k) {
  const std::size_t n = k + 1;
  std::vector<std::string> names;
  std::vector<std::size_t> sizes(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = a; b < n; ++b) sizes[a * n + b] = 1;
  }
  return finite_category(names, sizes, [](auto, auto, auto, auto, auto) { return std::size_t{0}; },
                         std::vector<std::size_t>(n, 0));
}

EnrichedCategory linearize(const EnrichedCategory& c, Field field) {
  if (c.instance.kind != vcat::Kind::finset) throw vcat::InstanceError("linearize needs a finset category");
  EnrichedCategory out;
  out.objects = c.objects;
  out.instance = vcat::Instance::modules(field);
  for (const auto& h : c.homs) out.homs.push_back(vcat::linearize(h, field));
  for (const auto& m : c.composition) out.composition.push_back(vcat::linearize(m, field));
  for (const auto& m : c.units) out.units.push_back(vcat::linearize(m, field));
  return out;
}

std::vector<std::vector<std::size_t>> inner_paths(std::size_t objects, std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    if (a == b) out.push_back({a});
    return out;
  }
  std::vector<std::size_t> mid(n - 1, 0);
  while (true) {
    std::vector<std::size_t> p{a};
    p.insert(p.end(), mid.begin(), mid.end());
    p.push_back(b);
    out.push_back(std::move(p));
    std::size_t pos = mid.size();
    while (pos > 0 && mid[pos - 1] + 1 == objects) mid[--pos] = 0;
    if (pos == 0) break;
    ++mid[pos - 1];
  }
  return out;
}

TruncatedSimplicial nerve_classical(const FiniteCategory& c, std::size_t truncation) {
  if (c.instance.kind != vcat::Kind::finset) throw vcat::InstanceError("nerve_classical needs a finite category");
  const std::size_t n = c.size();
  // A simplex is its object sequence followed by its arrows.
  std::vector<std::vector<std::vector<std::size_t>>> simplices(truncation + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(truncation + 1);
  for (std::size_t m = 0; m <= truncation; ++m) {
    std::vector<std::size_t> objs(m + 1, 0);
    while (true) {
      std::vector<std::size_t> sizes;
      bool empty = false;
      for (std::size_t i = 1; i <= m; ++i) {
        sizes.push_back(c.hom(objs[i - 1], objs[i]).size());
        empty = empty || sizes.back() == 0;
      }
      if (!empty) {
        std::vector<std::size_t> arrows(m, 0);
        while (true) {
          auto s = objs;
          s.insert(s.end(), arrows.begin(), arrows.end());
          index[m][s] = simplices[m].size();
          simplices[m].push_back(std::move(s));
          std::size_t pos = m;
          while (pos > 0 && arrows[pos - 1] + 1 == sizes[pos - 1]) arrows[--pos] = 0;
          if (pos == 0) break;
          ++arrows[pos - 1];
        }
      }
      std::size_t pos = m + 1;
      while (pos > 0 && objs[pos - 1] + 1 == n) objs[--pos] = 0;
      if (pos == 0) break;
      ++objs[pos - 1];
    }
  }
  auto compose = [&](std::size_t a, std::size_t b, std::size_t d, std::size_t f, std::size_t g) {
    return c.comp(a, b, d).table()[f * c.hom(b, d).size() + g];
  };
  TruncatedSimplicial x;
  x.allocate(truncation);
  x.base = c.objects;
  for (std::size_t m = 0; m <= truncation; ++m) x.levels[m] = Object::set(simplices[m].size());
  for (std::size_t m = 1; m <= truncation; ++m)
    for (std::size_t j = 0; j <= m; ++j) {
      std::vector<std::size_t> t;
      for (const auto& s : simplices[m]) {
        std::vector<std::size_t> objs(s.begin(), s.begin() + static_cast<long>(m + 1));
        std::vector<std::size_t> arrows(s.begin() + static_cast<long>(m + 1), s.end());
        objs.erase(objs.begin() + static_cast<long>(j));
        if (j == 0) {
          arrows.erase(arrows.begin());
        } else if (j == m) {
          arrows.pop_back();
        } else {
          const std::size_t g = compose(s[j - 1], s[j], s[j + 1], arrows[j - 1], arrows[j]);
          arrows.erase(arrows.begin() + static_cast<long>(j));
          arrows[j - 1] = g;
        }
        objs.insert(objs.end(), arrows.begin(), arrows.end());
        t.push_back(index[m - 1].at(objs));
      }
      x.d(m, j) = Morphism::function(x.levels[m], x.levels[m - 1], t);
    }
  for (std::size_t m = 0; m < truncation; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> t;
      for (const auto& s : simplices[m]) {
        std::vector<std::size_t> objs(s.begin(), s.begin() + static_cast<long>(m + 1));
        std::vector<std::size_t> arrows(s.begin() + static_cast<long>(m + 1), s.end());
        const std::size_t a = objs[i];
        objs.insert(objs.begin() + static_cast<long>(i), a);
        arrows.insert(arrows.begin() + static_cast<long>(i), c.unit(a).table()[0]);
        objs.insert(objs.end(), arrows.begin(), arrows.end());
        t.push_back(index[m + 1].at(objs));
      }
      x.s(m, i) = Morphism::function(x.levels[m], x.levels[m + 1], t);
    }
  return x;
}

namespace {

// Path summands of every level and vertex pair of an enriched nerve.
struct PathSums {
  std::size_t objects = 0;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> paths;  // [n][a*|O|+b]
  std::vector<std::vector<vcat::Coproduct>> sums;

  PathSums(const EnrichedCategory& c, std::size_t truncation) : objects(c.size()) {
    paths.resize(truncation + 1);
    sums.resize(truncation + 1);
    for (std::size_t n = 0; n <= truncation; ++n)
      for (std::size_t a = 0; a < objects; ++a)
        for (std::size_t b = 0; b < objects; ++b) {
          paths[n].push_back(inner_paths(objects, n, a, b));
          std::vector<Object> summands;
          for (const auto& p : paths[n].back()) summands.push_back(summand(c, p));
          sums[n].push_back(vcat::coproduct(summands, c.instance));
        }
  }

  static Object summand(const EnrichedCategory& c, const std::vector<std::size_t>& p) {
    std::vector<Object> factors;
    for (std::size_t i = 1; i < p.size(); ++i) factors.push_back(c.hom(p[i - 1], p[i]));
    return vcat::tensor(factors, c.instance);
  }

  std::size_t find(std::size_t n, const std::vector<std::size_t>& p) const {
    const auto& list = paths[n][p.front() * objects + p.back()];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), p) - list.begin());
  }
  const Morphism& injection(std::size_t n, const std::vector<std::size_t>& p) const {
    return sums[n][p.front() * objects + p.back()].injections[find(n, p)];
  }
  Quiver level(const EnrichedCategory& c, std::size_t n) const {
    std::vector<Object> comps;
    for (const auto& s : sums[n]) comps.push_back(s.object);
    return {c.objects, c.instance, comps};
  }
};

}  // namespace

TruncatedTemplicial nerve_enriched(const EnrichedCategory& c, std::size_t truncation) {
  const std::size_t no = c.size();
  PathSums ps(c, truncation);
  TruncatedTemplicial x;
  x.vertices = c.objects;
  x.instance = c.instance;
  x.data.allocate(truncation);
  for (std::size_t n = 0; n <= truncation; ++n) x.data.levels[n] = ps.level(c, n);

  auto build = [&](std::size_t n, std::size_t target_level, auto&& leg) {
    std::vector<Morphism> comps;
    for (std::size_t ab = 0; ab < no * no; ++ab) {
      std::vector<Morphism> legs;
      for (const auto& p : ps.paths[n][ab]) legs.push_back(leg(p));
      comps.push_back(vcat::copair(legs, x.data.levels[target_level].components()[ab]));
    }
    return QuiverMorphism(x.data.levels[n], x.data.levels[target_level], comps);
  };

  for (std::size_t n = 2; n <= truncation; ++n)
    for (std::size_t j = 1; j < n; ++j)
      x.data.d(n, j) = build(n, n - 1, [&](const std::vector<std::size_t>& p) {
        std::vector<Morphism> factors;
        for (std::size_t i = 1; i <= n; ++i) {
          if (i == j) continue;
          if (i == j + 1)
            factors.push_back(c.comp(p[j - 1], p[j], p[j + 1]));
          else
            factors.push_back(vcat::identity(c.hom(p[i - 1], p[i])));
        }
        auto q = p;
        q.erase(q.begin() + static_cast<long>(j));
        return vcat::compose(ps.injection(n - 1, q), vcat::tensor(factors, c.instance));
      });

  for (std::size_t n = 0; n < truncation; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      x.data.s(n, i) = build(n, n + 1, [&](const std::vector<std::size_t>& p) {
        std::vector<Morphism> factors;
        for (std::size_t t = 1; t <= n; ++t) {
          if (t == i + 1) factors.push_back(c.unit(p[i]));
          factors.push_back(vcat::identity(c.hom(p[t - 1], p[t])));
        }
        if (i == n) factors.push_back(c.unit(p[n]));
        auto q = p;
        q.insert(q.begin() + static_cast<long>(i), p[i]);
        return vcat::compose(ps.injection(n + 1, q), vcat::tensor(factors, c.instance));
      });

  for (std::size_t k = 0; k <= truncation; ++k)
    for (std::size_t l = 0; k + l <= truncation; ++l) {
      const auto qt = quiver::qtensor(x.data.levels[k], x.data.levels[l]);
      std::vector<Morphism> comps;
      for (std::size_t ab = 0; ab < no * no; ++ab) {
        std::vector<Morphism> legs;
        for (const auto& p : ps.paths[k + l][ab]) {
          std::vector<std::size_t> front(p.begin(), p.begin() + static_cast<long>(k + 1));
          std::vector<std::size_t> back(p.begin() + static_cast<long>(k), p.end());
          const std::size_t mid = p[k];
          legs.push_back(vcat::compose(qt.injection(p.front(), p.back(), mid),
                                       vcat::tensor(ps.injection(k, front), ps.injection(l, back))));
        }
        comps.push_back(vcat::copair(legs, qt.quiver.components()[ab]));
      }
      x.data.mu(k, l) = QuiverMorphism(x.data.levels[k + l], qt.quiver, comps);
    }

  const Quiver unit = quiver::qunit(c.objects, c.instance);
  std::vector<Morphism> eps;
  for (std::size_t ab = 0; ab < no * no; ++ab) {
    const auto& src = x.data.levels[0].components()[ab];
    const auto& tgt = unit.components()[ab];
    eps.push_back(c.instance.kind == vcat::Kind::finset
                      ? Morphism::function(src, tgt, std::vector<std::size_t>(src.size(), 0))
                      : Morphism::linear(src, tgt, Matrix::identity(src.size(), c.instance.field)));
  }
  x.data.counit = QuiverMorphism(x.data.levels[0], unit, eps);
  return x;
}

TemplicialMorphism nerve_functor(const EnrichedFunctor& f, const EnrichedCategory& c, const EnrichedCategory& d,
                                 std::size_t truncation) {
  Report r = check_functor(f, c, d);
  if (!r.passed()) throw FunctorError("nerve_functor: " + r.summary());
  const std::size_t no = c.size();
  PathSums pc(c, truncation), pd(d, truncation);
  TemplicialMorphism m{f.object_map, {}};
  for (std::size_t n = 0; n <= truncation; ++n) {
    const Quiver src = pc.level(c, n);
    const Quiver tgt = quiver::pullback(f.object_map, pd.level(d, n), c.objects);
    std::vector<Morphism> comps;
    for (std::size_t ab = 0; ab < no * no; ++ab) {
      std::vector<Morphism> legs;
      for (const auto& p : pc.paths[n][ab]) {
        std::vector<Morphism> factors;
        std::vector<std::size_t> image;
        for (auto v : p) image.push_back(f.object_map(v));
        for (std::size_t i = 1; i < p.size(); ++i) factors.push_back(f.homs[p[i - 1] * no + p[i]]);
        legs.push_back(vcat::compose(pd.injection(n, image), vcat::tensor(factors, c.instance)));
      }
      comps.push_back(vcat::copair(legs, tgt.components()[ab]));
    }
    m.components.emplace_back(src, tgt, comps);
  }
  return m;
}

TruncatedSimplicial standard_simplex(std::size_t k, std::size_t truncation) {
  return nerve_classical(ordinal(k), truncation);
}

Morphism front_face(const TruncatedSimplicial& x, std::size_t n, std::size_t k) {
  Morphism acc = vcat::identity(x.levels.at(n));
  for (std::size_t m = n; m > k; --m) acc = vcat::compose(x.d(m, m), acc);
  return acc;
}

Morphism back_face(const TruncatedSimplicial& x, std::size_t n, std::size_t k) {
  Morphism acc = vcat::identity(x.levels.at(n));
  for (std::size_t m = n; m > k; --m) acc = vcat::compose(x.d(m, 0), acc);
  return acc;
}

TruncatedColax leinster_forward(const TruncatedSimplicial& x) {
  const std::size_t N = x.truncation;
  for (const auto& l : x.levels)
    if (l.kind() != vcat::Kind::finset) throw vcat::InstanceError("leinster_forward needs a cartesian base");
  TruncatedColax y;
  y.allocate(N);
  y.levels = x.levels;
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j < n; ++j) y.d(n, j) = x.d(n, j);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i) y.s(n, i) = x.s(n, i);
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      y.mu(k, l) = vcat::pair(front_face(x, k + l, k), back_face(x, k + l, l));
  y.counit = vcat::terminal_map(x.levels[0]);
  return y;
}

TruncatedSimplicial leinster_backward(const TruncatedColax& x, std::vector<std::string> base) {
  const std::size_t N = x.truncation;
  for (const auto& l : x.levels)
    if (l.kind() != vcat::Kind::finset) throw vcat::InstanceError("leinster_backward needs a cartesian base");
  TruncatedSimplicial y;
  y.allocate(N);
  y.levels = x.levels;
  y.base = std::move(base);
  for (std::size_t n = 1; n <= N; ++n) {
    y.d(n, 0) = vcat::compose(vcat::project_second(x.levels[1], x.levels[n - 1]), x.mu(1, n - 1));
    y.d(n, n) = vcat::compose(vcat::project_first(x.levels[n - 1], x.levels[1]), x.mu(n - 1, 1));
    for (std::size_t j = 1; j < n; ++j) y.d(n, j) = x.d(n, j);
  }
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i) y.s(n, i) = x.s(n, i);
  return y;
}

}  // namespace templ::nerve
