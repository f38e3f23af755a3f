#include "templ/compare.hpp"

namespace templ::compare {

using quiver::Quiver;
using quiver::QuiverMorphism;
using quiver::VertexMap;
using vcat::Morphism;
using vcat::Object;

namespace {

Morphism retarget(const Morphism& m, const Object& target) {
  if (m.kind() == vcat::Kind::finset) return Morphism::function(m.source(), target, m.table());
  return Morphism::linear(m.source(), target, m.matrix());
}

Object copies_of(const Object& a, std::size_t copies) {
  std::vector<Object> family(copies, a);
  return vcat::coproduct_object(family, a.instance());
}

// X_0 (x) X_n (x) X_0 -> coproduct over (a,b) of X_n, after phi on both ends.
Morphism identification(const BasedColax& x, std::size_t n) {
  const auto& u = x.underlying;
  const std::size_t s = x.base.size(), d = u.levels[n].size();
  std::vector<Morphism> factors{x.base_iso, vcat::identity(u.levels[n]), x.base_iso};
  const Morphism iso = vcat::tensor(factors, x.instance());
  std::vector<std::size_t> table(s * d * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t e = 0; e < d; ++e)
      for (std::size_t b = 0; b < s; ++b) table[(a * d + e) * s + b] = (a * s + b) * d + e;
  return vcat::compose(vcat::structural(iso.target(), copies_of(u.levels[n], s * s), std::move(table)), iso);
}

}  // namespace

BasedColax collapse_c(const TruncatedTemplicial& x) {
  Report r = check_templicial(x);
  if (!r.passed()) throw std::invalid_argument("collapse_c: input is not templicial: " + r.summary());
  const auto t = quiver::terminal_vertex_map(x.vertices.size());
  const std::size_t N = x.truncation();
  BasedColax y;
  y.base = x.vertices;
  auto& u = y.underlying;
  u.allocate(N);
  for (std::size_t n = 0; n <= N; ++n) {
    u.levels[n] = quiver::pushforward(t, x.level(n))(0, 0);
    for (std::size_t j = 1; j < n; ++j) u.d(n, j) = quiver::pushforward(t, x.data.d(n, j))(0, 0);
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i) u.s(n, i) = quiver::pushforward(t, x.data.s(n, i))(0, 0);
  }
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      u.mu(k, l) = quiver::compose(quiver::pushforward_colax(t, x.level(k), x.level(l)),
                                   quiver::pushforward(t, x.data.mu(k, l)))(0, 0);
  const QuiverMorphism pushed_eps = quiver::pushforward(t, x.data.counit);
  u.counit = quiver::compose(quiver::pushforward_unit(t, x.vertices, x.instance), pushed_eps)(0, 0);
  y.base_iso = retarget(pushed_eps(0, 0), vcat::free_object(x.instance, x.vertices.size()));
  return y;
}

BasedColaxMorphism collapse_c_morphism(const TemplicialMorphism& m, const TruncatedTemplicial& x,
                                       const TruncatedTemplicial& y) {
  const std::size_t s = x.vertices.size();
  const auto ty = quiver::terminal_vertex_map(y.vertices.size());
  const auto& f = m.vertex_map;
  BasedColaxMorphism out{f, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    const Object target = quiver::pushforward(ty, y.level(n))(0, 0);
    std::vector<Morphism> legs;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b)
        legs.push_back(vcat::compose(quiver::pushforward_coprojection(ty, y.level(n), f(a), f(b)),
                                     m.components[n](a, b)));
    out.components.push_back(vcat::copair(legs, target));
  }
  return out;
}

DecomposingWitness is_decomposing(const Morphism& f, std::size_t copies) {
  const Object& a = f.source();
  if (copies == 0 || f.target().size() != copies * a.size() || f.target().instance() != a.instance())
    throw ShapeError("is_decomposing: target is not a coproduct of copies of the source");
  const auto inst = a.instance();
  std::vector<Morphism> iotas;
  for (std::size_t i = 0; i < copies; ++i) iotas.push_back(vcat::coprojection(a, copies, i));
  const Morphism f_fixed = retarget(f, copies_of(a, copies));
  std::vector<Morphism> fixed(copies, f_fixed);
  DecomposingWitness w{f, copies, false, false};
  w.coassociative =
      vcat::compose(vcat::direct_sum(fixed, inst), f_fixed) == vcat::compose(vcat::direct_sum(iotas, inst), f_fixed);
  w.retracts = vcat::compose(vcat::codiagonal(a, copies), f_fixed) == vcat::identity(a);
  return w;
}

Morphism mu_0n0(const BasedColax& x, std::size_t n) {
  const auto& u = x.underlying;
  const Morphism m = vcat::compose(vcat::tensor(u.mu(0, n), vcat::identity(u.levels[0])), u.mu(n, 0));
  return vcat::compose(identification(x, n), m);
}

Morphism mu_0n0_alternative(const BasedColax& x, std::size_t n) {
  const auto& u = x.underlying;
  const Morphism m = vcat::compose(vcat::tensor(vcat::identity(u.levels[0]), u.mu(n, 0)), u.mu(0, n));
  return vcat::compose(identification(x, n), m);
}

ComponentFamily component_family(const BasedColax& x) {
  const std::size_t s = x.base.size();
  const auto& u = x.underlying;
  ComponentFamily fam;
  fam.base = x.base;
  fam.objects.resize(u.truncation + 1);
  fam.inclusions.resize(u.truncation + 1);
  for (std::size_t n = 0; n <= u.truncation; ++n) {
    const Morphism m = mu_0n0(x, n);
    for (std::size_t ab = 0; ab < s * s; ++ab) {
      auto eq = vcat::equalizer(m, vcat::coprojection(u.levels[n], s * s, ab));
      fam.objects[n].push_back(eq.object);
      fam.inclusions[n].push_back(eq.inclusion);
    }
  }
  return fam;
}

namespace {

// (e_{a,c} (x) e_{c,b})_c : coproduct over c of X_k(a,c) (x) X_l(c,b) -> X_k (x) X_l.
Morphism split_inclusion(const BasedColax& x, const ComponentFamily& fam, std::size_t k, std::size_t l,
                         std::size_t a, std::size_t b) {
  const std::size_t s = x.base.size();
  std::vector<Morphism> legs;
  for (std::size_t c = 0; c < s; ++c)
    legs.push_back(vcat::tensor(fam.inclusions[k][a * s + c], fam.inclusions[l][c * s + b]));
  return vcat::copair(legs, vcat::tensor(x.underlying.levels[k], x.underlying.levels[l]));
}

}  // namespace

TruncatedTemplicial decompose_d(const BasedColax& x) { return decompose_d(x, component_family(x)); }

TruncatedTemplicial decompose_d(const BasedColax& x, const ComponentFamily& fam) {
  const auto& u = x.underlying;
  const std::size_t s = x.base.size(), N = u.truncation;
  const auto inst = x.instance();
  TruncatedTemplicial d;
  d.vertices = x.base;
  d.instance = inst;
  d.data.allocate(N);
  for (std::size_t n = 0; n <= N; ++n) d.data.levels[n] = Quiver(x.base, inst, fam.objects[n]);
  auto restrict = [&](const Morphism& g, std::size_t from, std::size_t to) {
    std::vector<Morphism> comps;
    for (std::size_t ab = 0; ab < s * s; ++ab)
      comps.push_back(vcat::factor_through_mono(fam.inclusions[to][ab], vcat::compose(g, fam.inclusions[from][ab])));
    return QuiverMorphism(d.data.levels[from], d.data.levels[to], comps);
  };
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t j = 1; j < n; ++j) d.data.d(n, j) = restrict(u.d(n, j), n, n - 1);
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i) d.data.s(n, i) = restrict(u.s(n, i), n, n + 1);
  }
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l) {
      const Quiver target = quiver::qtensor_object(d.data.levels[k], d.data.levels[l]);
      std::vector<Morphism> comps;
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
          auto h = vcat::compose(u.mu(k, l), fam.inclusions[k + l][a * s + b]);
          comps.push_back(retarget(vcat::factor_through_mono(split_inclusion(x, fam, k, l, a, b), h),
                                   target.components()[a * s + b]));
        }
      d.data.mu(k, l) = QuiverMorphism(d.data.levels[k + l], target, comps);
    }
  const Quiver unit = quiver::qunit(x.base, inst);
  std::vector<Morphism> eps;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const Object& comp = fam.objects[0][a * s + b];
      if (a == b) {
        eps.push_back(vcat::compose(u.counit, fam.inclusions[0][a * s + b]));
      } else {
        if (comp.size() != 0) throw vcat::FactorizationError("decompose_d: off-diagonal level-zero component");
        eps.push_back(vcat::zero_map(comp, unit.components()[a * s + b]));
      }
    }
  d.data.counit = QuiverMorphism(d.data.levels[0], unit, eps);
  return d;
}

SplitWitness split_equalizer_witness(const Morphism& f, std::size_t copies, std::size_t j) {
  if (f.kind() != vcat::Kind::matmod) throw vcat::InstanceError("split_equalizer_witness needs an additive instance");
  const Object& a = f.source();
  const Morphism f_fixed = retarget(f, copies_of(a, copies));
  auto eq = vcat::equalizer(f_fixed, vcat::coprojection(a, copies, j));
  std::vector<Object> family(copies, a);
  const Morphism pf = vcat::compose(vcat::projection(family, j), f_fixed);
  SplitWitness w{eq.object, eq.inclusion, {}, false};
  try {
    w.section = vcat::factor_through_mono(eq.inclusion, pf);
  } catch (const vcat::FactorizationError&) {
    return w;
  }
  w.verified = vcat::compose(eq.inclusion, w.section) == pf &&
               vcat::compose(w.section, eq.inclusion) == vcat::identity(eq.object);
  return w;
}

Report combined_split_check(const Morphism& f, std::size_t copies) {
  Report r;
  const Object& a = f.source();
  const auto inst = a.instance();
  const Object sum = copies_of(a, copies);
  const Morphism f_fixed = retarget(f, sum);
  std::vector<Morphism> fs(copies, f_fixed), iotas;
  for (std::size_t i = 0; i < copies; ++i) iotas.push_back(vcat::coprojection(a, copies, i));
  const Morphism nabla = vcat::codiagonal(a, copies);
  const Morphism outer = vcat::codiagonal(sum, copies);
  r.check(vcat::compose(nabla, f_fixed) == vcat::identity(a), "retraction");
  r.check(vcat::compose(outer, vcat::direct_sum(fs, inst)) == vcat::compose(f_fixed, nabla), "outer-codiagonal-f");
  r.check(vcat::compose(outer, vcat::direct_sum(iotas, inst)) == vcat::identity(sum), "outer-codiagonal-iota");
  return r;
}

Report check_decomposition(const BasedColax& x) {
  using detail::at;
  Report r;
  const auto& u = x.underlying;
  const std::size_t s = x.base.size(), N = u.truncation;
  const ComponentFamily fam = component_family(x);
  for (std::size_t n = 0; n <= N; ++n) {
    r.check(vcat::is_iso(vcat::copair(fam.inclusions[n], u.levels[n])), "coproduct-iso",
            [&] { return at({{"n", n}}); });
    const Morphism m = mu_0n0(x, n);
    r.check(m == mu_0n0_alternative(x, n), "mu0n0-bracketing", [&] { return at({{"n", n}}); });
    r.check(is_decomposing(m, s * s).decomposing(), "mu0n0-decomposing", [&] { return at({{"n", n}}); });
    if (x.instance().kind == vcat::Kind::matmod) {
      for (std::size_t ab = 0; ab < s * s; ++ab)
        r.check(split_equalizer_witness(m, s * s, ab).verified, "split-equalizer",
                [&] { return at({{"n", n}, {"a", ab / s}, {"b", ab % s}}); });
    }
    Report c = combined_split_check(m, s * s);
    r.check(c.passed(), "combined-split", [&] { return at({{"n", n}}) + " " + c.summary(); });
  }
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const auto& e = fam.inclusions[0][a * s + b];
      const bool ok = a == b ? vcat::is_iso(vcat::compose(u.counit, e)) : e.source().size() == 0;
      r.check(ok, "level-zero", [&] { return at({{"a", a}, {"b", b}}); });
    }
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
          const Morphism m = split_inclusion(x, fam, k, l, a, b);
          bool ok = vcat::is_mono(m);
          if (ok) {
            try {
              vcat::factor_through_mono(m, vcat::compose(u.mu(k, l), fam.inclusions[k + l][a * s + b]));
            } catch (const vcat::FactorizationError&) {
              ok = false;
            }
          }
          r.check(ok, "comult-factorization", [&] { return at({{"k", k}, {"l", l}, {"a", a}, {"b", b}}); });
        }
  return r;
}

RoundtripResult roundtrip_theorem_check(const TruncatedTemplicial& x, const IsoSearchOptions& options) {
  RoundtripResult res;
  Report& r = res.report;
  Report in = check_templicial(x);
  if (!r.check(in.passed(), "input-templicial", [&] { return in.summary(); })) return res;
  const std::size_t s = x.vertices.size(), N = x.truncation();

  const BasedColax y = collapse_c(x);
  Report based = check_based(y);
  if (!r.check(based.passed(), "collapse-based", [&] { return based.summary(); })) return res;
  const ComponentFamily fam = component_family(y);
  TruncatedTemplicial d;
  try {
    d = decompose_d(y, fam);
  } catch (const vcat::FactorizationError& e) {
    r.fail("decompose", "", e.what());
    return res;
  }
  Report dt = check_templicial(d);
  if (!r.check(dt.passed(), "decompose-templicial", [&] { return dt.summary(); })) return res;

  // X -> d c X: the coprojection of X_n(a,b) factors through the equalizer e_{a,b}.
  const auto t = quiver::terminal_vertex_map(s);
  TemplicialMorphism unit{quiver::identity_map(x.vertices), {}};
  try {
    for (std::size_t n = 0; n <= N; ++n) {
      std::vector<Morphism> comps;
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
          comps.push_back(vcat::factor_through_mono(fam.inclusions[n][a * s + b],
                                                    quiver::pushforward_coprojection(t, x.level(n), a, b)));
      unit.components.emplace_back(x.level(n), d.level(n), comps);
    }
  } catch (const vcat::FactorizationError& e) {
    r.fail("unit-morphism", "", e.what());
    return res;
  }
  Report um = check_templicial_morphism(unit, x, d);
  r.check(um.passed(), "unit-morphism", [&] { return um.summary(); });
  r.check(is_iso(unit), "unit-iso");
  res.unit = unit;

  res.independent = templicial_iso_check(x, d, options);
  r.check(res.independent.status == IsoSearchResult::Status::witness, "independent-iso",
          [&] { return to_string(res.independent.status) + ": " + res.independent.reason; });

  // c d Y -> Y through (e_{a,b})_{a,b}.
  const BasedColax z = collapse_c(d);
  BasedColaxMorphism counit{quiver::identity_map(x.vertices), {}};
  for (std::size_t n = 0; n <= N; ++n)
    counit.components.push_back(vcat::copair(fam.inclusions[n], y.underlying.levels[n]));
  Report cm = check_based_morphism(counit, z, y);
  r.check(cm.passed(), "counit-morphism", [&] { return cm.summary(); });
  bool all_iso = true;
  for (const auto& c : counit.components) all_iso = all_iso && vcat::is_iso(c);
  r.check(all_iso, "counit-iso");
  res.counit = counit;
  return res;
}

}  // namespace templ::compare
