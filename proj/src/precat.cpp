#include "templ/precat.hpp"

#include <numeric>
#include <random>

#include "templ/compare.hpp"
#include "templ/generators.hpp"
#include "templ/nerve.hpp"

namespace templ::precat {

using quiver::Quiver;
using quiver::QuiverMorphism;
using vcat::Morphism;
using vcat::Object;

std::size_t sequence_index(const Sequence& a, std::size_t vertices) {
  std::size_t idx = 0;
  for (auto v : a) idx = idx * vertices + v;
  return idx;
}

Sequence sequence_at(std::size_t index, std::size_t length, std::size_t vertices) {
  Sequence a(length);
  for (std::size_t i = length; i-- > 0;) {
    a[i] = index % vertices;
    index /= vertices;
  }
  return a;
}

std::size_t sequence_count(std::size_t length, std::size_t vertices) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < length; ++i) c *= vertices;
  return c;
}

namespace {

Sequence drop(Sequence a, std::size_t j) {
  a.erase(a.begin() + static_cast<long>(j));
  return a;
}

Sequence repeat(Sequence a, std::size_t i) {
  a.insert(a.begin() + static_cast<long>(i), a[i]);
  return a;
}

Sequence slice(const Sequence& a, std::size_t first, std::size_t count) {
  return {a.begin() + static_cast<long>(first), a.begin() + static_cast<long>(first + count)};
}

std::string show(const Sequence& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

bool inner(std::size_t n, std::size_t j) { return j > 0 && j < n; }

}  // namespace

const Object& PrecatData::at(const Sequence& a) const {
  return components.at(a.size() - 1).at(sequence_index(a, vertices.size()));
}

const Morphism& PrecatData::face(const Sequence& a, std::size_t j) const {
  return faces.at(a.size() - 1).at(sequence_index(a, vertices.size())).at(j);
}

const Morphism& PrecatData::degeneracy(const Sequence& a, std::size_t i) const {
  return degeneracies.at(a.size() - 1).at(sequence_index(a, vertices.size())).at(i);
}

Morphism PrecatData::mu(std::size_t k, std::size_t l, const Sequence& a) const {
  if (!cartesian) return comult.at(k).at(l).at(sequence_index(a, vertices.size()));
  // Front: drop the last l vertices. Back: drop the first k.
  Morphism front = vcat::identity(at(a)), back = front;
  Sequence f = a, b = a;
  for (std::size_t r = 0; r < l; ++r) {
    front = vcat::compose(face(f, f.size() - 1), front);
    f.pop_back();
  }
  for (std::size_t r = 0; r < k; ++r) {
    back = vcat::compose(face(b, 0), back);
    b.erase(b.begin());
  }
  return vcat::pair(front, back);
}

Morphism PrecatData::counit(std::size_t a) const {
  if (!cartesian) return counits.at(a);
  return vcat::terminal_map(at({a}));
}

void PrecatData::allocate() {
  const std::size_t s = vertices.size(), N = truncation;
  components.assign(N + 1, {});
  faces.assign(N + 1, {});
  degeneracies.assign(N + 1, {});
  comult.clear();
  counits.clear();
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t c = sequence_count(n + 1, s);
    components[n].assign(c, Object{});
    faces[n].assign(c, std::vector<Morphism>(n >= 1 ? n + 1 : 0));
    degeneracies[n].assign(c, std::vector<Morphism>(n < N ? n + 1 : 0));
  }
  if (!cartesian) {
    comult.assign(N + 1, {});
    for (std::size_t k = 0; k <= N; ++k) {
      comult[k].assign(N - k + 1, {});
      for (std::size_t l = 0; k + l <= N; ++l) comult[k][l].assign(sequence_count(k + l + 1, s), Morphism{});
    }
    counits.assign(s, Morphism{});
  }
}

std::pair<Morphism, Sequence> act(const PrecatData& p, const Sequence& a, const fint::IntervalMap& h) {
  if (a.size() != h.target() + 1) throw std::invalid_argument("act: sequence length does not match the map");
  const auto w = fint::factorize(h);
  Morphism acc = vcat::identity(p.at(a));
  Sequence cur = a;
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    if (it->kind == fint::Generator::Kind::face) {
      acc = vcat::compose(p.face(cur, it->index), acc);
      cur = drop(cur, it->index);
    } else {
      acc = vcat::compose(p.degeneracy(cur, it->index), acc);
      cur = repeat(cur, it->index);
    }
  }
  return {acc, cur};
}

Report check_precat(const PrecatData& p) {
  Report r;
  const std::size_t s = p.vertices.size(), N = p.truncation;
  if (p.components.size() != N + 1 || p.faces.size() != N + 1 || p.degeneracies.size() != N + 1) {
    r.fail("shape", "", "storage does not match the truncation");
    return r;
  }
  auto face_used = [&](std::size_t n, std::size_t j) { return p.cartesian || inner(n, j); };
  bool shapes = true;
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t q = 0; q < sequence_count(n + 1, s); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      shapes &= r.check(p.at(a).instance() == p.instance, "shape", [&] { return "X" + show(a); });
      if (n >= 1)
        for (std::size_t j = 0; j <= n; ++j)
          if (face_used(n, j))
            shapes &= r.check(p.face(a, j).source() == p.at(a) && p.face(a, j).target() == p.at(drop(a, j)), "shape",
                              [&] { return "d_" + std::to_string(j) + " on " + show(a); });
      if (n < N)
        for (std::size_t i = 0; i <= n; ++i)
          shapes &= r.check(p.degeneracy(a, i).source() == p.at(a) && p.degeneracy(a, i).target() == p.at(repeat(a, i)),
                            "shape", [&] { return "s_" + std::to_string(i) + " on " + show(a); });
    }
  if (!p.cartesian) {
    shapes &= r.check(p.comult.size() == N + 1 && p.counits.size() == s, "shape", [] { return std::string("comult"); });
    if (shapes)
      for (std::size_t k = 0; k <= N; ++k)
        for (std::size_t l = 0; k + l <= N; ++l)
          for (std::size_t q = 0; q < sequence_count(k + l + 1, s); ++q) {
            const Sequence a = sequence_at(q, k + l + 1, s);
            const auto& m = p.mu(k, l, a);
            shapes &= r.check(m.source() == p.at(a) &&
                                  m.target() == vcat::tensor(p.at(slice(a, 0, k + 1)), p.at(slice(a, k, l + 1))),
                              "shape", [&] { return "mu_" + std::to_string(k) + "," + std::to_string(l) + " on " + show(a); });
          }
  }
  if (!shapes) return r;

  using vcat::compose;
  auto where = [](std::size_t i, std::size_t j, const Sequence& a) {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " on " + show(a);
  };
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t q = 0; q < sequence_count(n + 1, s); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          if (!face_used(n, j) || !face_used(n, i) || !face_used(n - 1, i) || !face_used(n - 1, j - 1)) continue;
          r.check(compose(p.face(drop(a, j), i), p.face(a, j)) == compose(p.face(drop(a, i), j - 1), p.face(a, i)),
                  "face-face", [&] { return where(i, j, a); });
        }
    }
  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t q = 0; q < sequence_count(n + 1, s); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          r.check(compose(p.degeneracy(repeat(a, j), i), p.degeneracy(a, j)) ==
                      compose(p.degeneracy(repeat(a, i), j + 1), p.degeneracy(a, i)),
                  "degeneracy-degeneracy", [&] { return where(i, j, a); });
    }
  for (std::size_t n = 0; n + 1 <= N; ++n)
    for (std::size_t q = 0; q < sequence_count(n + 1, s); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          if (!face_used(n + 1, i)) continue;
          const Sequence up = repeat(a, j);
          auto lhs = compose(p.face(up, i), p.degeneracy(a, j));
          Morphism rhs;
          if (i < j)
            rhs = compose(p.degeneracy(drop(a, i), j - 1), p.face(a, i));
          else if (i == j || i == j + 1)
            rhs = vcat::identity(p.at(a));
          else
            rhs = compose(p.degeneracy(drop(a, i - 1), j), p.face(a, i - 1));
          r.check(lhs == rhs, "face-degeneracy", [&] { return where(i, j, a); });
        }
    }

  if (p.cartesian) {
    if (p.instance.kind != vcat::Kind::finset) r.fail("cartesian-base", "", "cartesian data needs the finset instance");
    for (std::size_t a = 0; a < s; ++a)
      r.check(p.at({a}).size() == 1, "unit-condition", [&] { return "X(" + std::to_string(a) + ")"; });
    return r;
  }

  const Object one = vcat::unit(p.instance);
  for (std::size_t a = 0; a < s; ++a)
    r.check(p.counit(a).source() == p.at({a}) && p.counit(a).target() == one && vcat::is_iso(p.counit(a)),
            "counit-iso", [&] { return "X(" + std::to_string(a) + ")"; });
  if (!r.passed()) return r;
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      for (std::size_t m = 0; k + l + m <= N; ++m)
        for (std::size_t q = 0; q < sequence_count(k + l + m + 1, s); ++q) {
          const Sequence a = sequence_at(q, k + l + m + 1, s);
          auto lhs = compose(vcat::tensor(p.mu(k, l, slice(a, 0, k + l + 1)), vcat::identity(p.at(slice(a, k + l, m + 1)))),
                             p.mu(k + l, m, a));
          auto rhs = compose(vcat::tensor(vcat::identity(p.at(slice(a, 0, k + 1))), p.mu(l, m, slice(a, k, l + m + 1))),
                             p.mu(k, l + m, a));
          r.check(lhs == rhs, "coassociativity", [&] {
            return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " m=" + std::to_string(m) + " on " + show(a);
          });
        }
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t q = 0; q < sequence_count(n + 1, s); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      const auto id = vcat::identity(p.at(a));
      r.check(compose(vcat::tensor(p.counit(a.front()), id), p.mu(0, n, a)) == id, "left-counit",
              [&] { return show(a); });
      r.check(compose(vcat::tensor(id, p.counit(a.back())), p.mu(n, 0, a)) == id, "right-counit",
              [&] { return show(a); });
    }
  auto maps_into = [](std::size_t k) {
    std::vector<fint::IntervalMap> out{fint::IntervalMap::identity(k)};
    for (std::size_t j = 1; j < k; ++j) out.push_back(fint::IntervalMap::coface(k, j));
    for (std::size_t i = 0; i <= k; ++i) out.push_back(fint::IntervalMap::codegeneracy(k, i));
    return out;
  };
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      for (const auto& f : maps_into(k))
        for (const auto& g : maps_into(l)) {
          if ((f.is_identity() && g.is_identity()) || f.source() + g.source() > N) continue;
          for (std::size_t q = 0; q < sequence_count(k + l + 1, s); ++q) {
            const Sequence a = sequence_at(q, k + l + 1, s);
            auto [xfg, b] = act(p, a, fint::sum(f, g));
            auto [xf, bf] = act(p, slice(a, 0, k + 1), f);
            auto [xg, bg] = act(p, slice(a, k, l + 1), g);
            r.check(compose(p.mu(f.source(), g.source(), b), xfg) == compose(vcat::tensor(xf, xg), p.mu(k, l, a)),
                    "naturality", [&] { return "f=" + fint::to_string(f) + " g=" + fint::to_string(g) + " on " + show(a); });
          }
        }
  return r;
}

Morphism FiberFamily::canonical() const {
  if (inclusions.empty()) throw std::invalid_argument("canonical: empty family");
  return vcat::copair(inclusions, inclusions.front().target());
}

FiberFamily disj_d(const Morphism& g) {
  const std::size_t s = g.target().size();
  const Object& a = g.source();
  FiberFamily out;
  if (g.kind() == vcat::Kind::finset) {
    for (std::size_t v = 0; v < s; ++v) {
      std::vector<std::size_t> members;
      for (std::size_t x = 0; x < a.size(); ++x)
        if (g(x) == v) members.push_back(x);
      out.fibers.push_back(Object::set(members.size()));
      out.inclusions.push_back(Morphism::function(out.fibers.back(), a, members));
    }
    return out;
  }
  const Field k = a.field();
  for (std::size_t v = 0; v < s; ++v) {
    // Kernel of the coordinates other than v.
    Matrix others(s - 1, a.size(), k);
    std::size_t row = 0;
    for (std::size_t w = 0; w < s; ++w) {
      if (w == v) continue;
      for (std::size_t c = 0; c < a.size(); ++c) others.set(row, c, g.matrix()(w, c));
      ++row;
    }
    Matrix basis = s == 1 ? Matrix::identity(a.size(), k) : nullspace(others);
    out.fibers.push_back(Object::module(basis.cols(), k));
    out.inclusions.push_back(Morphism::linear(out.fibers.back(), a, std::move(basis)));
  }
  return out;
}

Morphism disj_c(const std::vector<Object>& family, vcat::Instance inst) {
  const Object one = vcat::unit(inst);
  const Object fs = vcat::free_object(inst, family.size());
  std::vector<Morphism> legs;
  for (std::size_t v = 0; v < family.size(); ++v) {
    const Morphism sum = vcat::structural(family[v], one, std::vector<std::size_t>(family[v].size(), 0));
    legs.push_back(vcat::compose(vcat::coprojection(one, family.size(), v), sum));
  }
  return vcat::copair(legs, fs);
}

namespace {

void require_unit_condition(const PrecatData& p) {
  if (!p.cartesian || p.instance.kind != vcat::Kind::finset)
    throw PrecatError("simplicial form needs cartesian finset data");
  for (std::size_t a = 0; a < p.vertices.size(); ++a)
    if (p.at({a}).size() != 1) throw PrecatError("unit condition fails at vertex " + p.vertices[a]);
}

}  // namespace

TruncatedSimplicial simpson_forward(const PrecatData& p) {
  require_unit_condition(p);
  const std::size_t s = p.vertices.size(), N = p.truncation;
  std::vector<vcat::Coproduct> sums;
  for (std::size_t n = 0; n <= N; ++n) sums.push_back(vcat::coproduct(p.components[n], p.instance));
  TruncatedSimplicial x;
  x.allocate(N);
  x.base = p.vertices;
  for (std::size_t n = 0; n <= N; ++n) x.levels[n] = sums[n].object;
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t count = sequence_count(n + 1, s);
    if (n >= 1)
      for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Morphism> legs;
        for (std::size_t q = 0; q < count; ++q) {
          const Sequence a = sequence_at(q, n + 1, s);
          legs.push_back(vcat::compose(sums[n - 1].injections[sequence_index(drop(a, j), s)], p.face(a, j)));
        }
        x.d(n, j) = vcat::copair(legs, x.levels[n - 1]);
      }
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Morphism> legs;
        for (std::size_t q = 0; q < count; ++q) {
          const Sequence a = sequence_at(q, n + 1, s);
          legs.push_back(vcat::compose(sums[n + 1].injections[sequence_index(repeat(a, i), s)], p.degeneracy(a, i)));
        }
        x.s(n, i) = vcat::copair(legs, x.levels[n + 1]);
      }
  }
  return x;
}

std::vector<Sequence> vertex_sequences(const TruncatedSimplicial& x, std::size_t n) {
  std::vector<Sequence> out;
  for (std::size_t e = 0; e < x.levels.at(n).size(); ++e) {
    Sequence v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t cur = e, level = n;
      for (std::size_t r = 0; r < i; ++r) cur = x.d(level--, 0)(cur);
      while (level > 0) {
        cur = x.d(level, level)(cur);
        --level;
      }
      v[i] = cur;
    }
    out.push_back(std::move(v));
  }
  return out;
}

PrecatData simpson_backward(const TruncatedSimplicial& x) {
  if (x.levels.empty() || x.levels[0].kind() != vcat::Kind::finset)
    throw vcat::InstanceError("simpson_backward needs a finset simplicial object");
  const std::size_t s = x.levels[0].size(), N = x.truncation;
  PrecatData p;
  if (!x.base.empty() && x.base.size() != s) throw PrecatError("base labels do not match X_0");
  p.vertices = x.base;
  for (std::size_t v = p.vertices.size(); v < s; ++v) p.vertices.push_back("v" + std::to_string(v));
  p.instance = vcat::Instance::sets();
  p.truncation = N;
  p.cartesian = true;
  p.allocate();

  // fiber[n][q] lists the simplices over sequence q; local[n][e] is e's position there.
  std::vector<std::vector<std::vector<std::size_t>>> fiber(N + 1);
  std::vector<std::vector<std::size_t>> local(N + 1), label(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    fiber[n].assign(sequence_count(n + 1, s), {});
    for (const auto& v : vertex_sequences(x, n)) {
      const std::size_t q = sequence_index(v, s);
      local[n].push_back(fiber[n][q].size());
      label[n].push_back(q);
      fiber[n][q].push_back(local[n].size() - 1);
    }
    for (std::size_t q = 0; q < fiber[n].size(); ++q) p.components[n][q] = Object::set(fiber[n][q].size());
  }
  auto restrict = [&](const Morphism& m, std::size_t n, std::size_t m_level, const Sequence& a, const Sequence& b) {
    const std::size_t qa = sequence_index(a, s), qb = sequence_index(b, s);
    std::vector<std::size_t> t;
    for (auto e : fiber[n][qa]) {
      const std::size_t img = m(e);
      if (label[m_level][img] != qb) throw PrecatError("structure map leaves its fiber over " + show(a));
      t.push_back(local[m_level][img]);
    }
    return Morphism::function(p.components[n][qa], p.components[m_level][qb], std::move(t));
  };
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t q = 0; q < fiber[n].size(); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      if (n >= 1)
        for (std::size_t j = 0; j <= n; ++j) p.faces[n][q][j] = restrict(x.d(n, j), n, n - 1, a, drop(a, j));
      if (n < N)
        for (std::size_t i = 0; i <= n; ++i) p.degeneracies[n][q][i] = restrict(x.s(n, i), n, n + 1, a, repeat(a, i));
    }
  return p;
}

PrecatData nerve_precat(const nerve::EnrichedCategory& c, std::size_t truncation) {
  PrecatData p;
  p.vertices = c.objects;
  p.instance = c.instance;
  p.truncation = truncation;
  p.cartesian = false;
  p.allocate();
  const std::size_t s = c.size();
  auto factors = [&](const Sequence& a) {
    std::vector<Object> f;
    for (std::size_t i = 1; i < a.size(); ++i) f.push_back(c.hom(a[i - 1], a[i]));
    return f;
  };
  auto ids = [&](const Sequence& a, std::size_t first, std::size_t last) {
    std::vector<Morphism> m;
    for (std::size_t i = first + 1; i <= last; ++i) m.push_back(vcat::identity(c.hom(a[i - 1], a[i])));
    return m;
  };
  for (std::size_t n = 0; n <= truncation; ++n)
    for (std::size_t q = 0; q < sequence_count(n + 1, s); ++q) {
      const Sequence a = sequence_at(q, n + 1, s);
      p.components[n][q] = vcat::tensor(factors(a), c.instance);
      for (std::size_t j = 1; j < n; ++j) {
        auto m = ids(a, 0, j - 1);
        m.push_back(c.comp(a[j - 1], a[j], a[j + 1]));
        for (auto& g : ids(a, j + 1, n)) m.push_back(g);
        p.faces[n][q][j] = vcat::tensor(m, c.instance);
      }
      if (n < truncation)
        for (std::size_t i = 0; i <= n; ++i) {
          auto m = ids(a, 0, i);
          m.push_back(c.unit(a[i]));
          for (auto& g : ids(a, i, n)) m.push_back(g);
          p.degeneracies[n][q][i] = vcat::tensor(m, c.instance);
        }
    }
  for (std::size_t k = 0; k <= truncation; ++k)
    for (std::size_t l = 0; k + l <= truncation; ++l)
      for (std::size_t q = 0; q < sequence_count(k + l + 1, s); ++q) {
        const Sequence a = sequence_at(q, k + l + 1, s);
        const Object split = vcat::tensor(p.at(slice(a, 0, k + 1)), p.at(slice(a, k, l + 1)));
        p.comult[k][l][q] = vcat::structural(p.at(a), split, [&] {
          std::vector<std::size_t> t(p.at(a).size());
          std::iota(t.begin(), t.end(), 0);
          return t;
        }());
      }
  for (std::size_t a = 0; a < s; ++a) p.counits[a] = vcat::identity(vcat::unit(c.instance));
  return p;
}

namespace {

// Coproducts over inner sequences, per level and vertex pair, in the order of nerve::inner_paths.
struct InnerSums {
  std::size_t s = 0;
  std::vector<std::vector<std::vector<Sequence>>> paths;  // [n][a*s+b]
  std::vector<std::vector<vcat::Coproduct>> sums;

  explicit InnerSums(const PrecatData& p) : s(p.vertices.size()) {
    for (std::size_t n = 0; n <= p.truncation; ++n) {
      paths.emplace_back();
      sums.emplace_back();
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
          paths[n].push_back(nerve::inner_paths(s, n, a, b));
          std::vector<Object> summands;
          for (const auto& path : paths[n].back()) summands.push_back(p.at(path));
          sums[n].push_back(vcat::coproduct(summands, p.instance));
        }
    }
  }

  // inner_paths enumerates the middle vertices lexicographically.
  std::size_t position(const Sequence& path) const {
    std::size_t idx = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) idx = idx * s + path[i];
    return idx;
  }
  const Morphism& injection(const Sequence& path) const {
    return sums[path.size() - 1][path.front() * s + path.back()].injections[position(path)];
  }
  Quiver level(const PrecatData& p, std::size_t n) const {
    std::vector<Object> comps;
    for (const auto& c : sums[n]) comps.push_back(c.object);
    return {p.vertices, p.instance, comps};
  }
};

}  // namespace

TruncatedTemplicial cprime(const PrecatData& p) {
  const std::size_t s = p.vertices.size(), N = p.truncation;
  InnerSums is(p);
  TruncatedTemplicial x;
  x.vertices = p.vertices;
  x.instance = p.instance;
  auto& d = x.data;
  d.allocate(N);
  for (std::size_t n = 0; n <= N; ++n) d.levels[n] = is.level(p, n);

  auto levelwise = [&](std::size_t n, const Quiver& target, auto&& leg) {
    std::vector<Morphism> comps;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b) {
        std::vector<Morphism> legs;
        for (const auto& path : is.paths[n][a * s + b]) legs.push_back(leg(path));
        comps.push_back(vcat::copair(legs, target(a, b)));
      }
    return QuiverMorphism(d.levels[n], target, std::move(comps));
  };
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t j = 1; j < n; ++j)
      d.d(n, j) = levelwise(n, d.levels[n - 1], [&](const Sequence& path) {
        return vcat::compose(is.injection(drop(path, j)), p.face(path, j));
      });
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i)
        d.s(n, i) = levelwise(n, d.levels[n + 1], [&](const Sequence& path) {
          return vcat::compose(is.injection(repeat(path, i)), p.degeneracy(path, i));
        });
  }
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l) {
      const auto qt = quiver::qtensor(d.levels[k], d.levels[l]);
      d.mu(k, l) = levelwise(k + l, qt.quiver, [&](const Sequence& path) {
        const Sequence front = slice(path, 0, k + 1), back = slice(path, k, l + 1);
        return vcat::compose(qt.injection(path.front(), path.back(), path[k]),
                             vcat::compose(vcat::tensor(is.injection(front), is.injection(back)), p.mu(k, l, path)));
      });
    }
  const Quiver one = quiver::qunit(p.vertices, p.instance);
  d.counit = levelwise(0, one, [&](const Sequence& path) { return p.counit(path.front()); });
  return x;
}

PrecatMorphism identity_morphism(const PrecatData& p) {
  PrecatMorphism m{quiver::identity_map(p.vertices), {}};
  for (const auto& level : p.components) {
    m.components.emplace_back();
    for (const auto& o : level) m.components.back().push_back(vcat::identity(o));
  }
  return m;
}

PrecatMorphism compose(const PrecatMorphism& g, const PrecatMorphism& f, const PrecatData& source) {
  const std::size_t s = source.vertices.size(), t = f.vertex_map.target_count();
  PrecatMorphism out{quiver::compose(g.vertex_map, f.vertex_map), {}};
  for (std::size_t n = 0; n < f.components.size(); ++n) {
    out.components.emplace_back();
    for (std::size_t q = 0; q < f.components[n].size(); ++q) {
      Sequence a = sequence_at(q, n + 1, s);
      for (auto& v : a) v = f.vertex_map(v);
      out.components[n].push_back(vcat::compose(g.components[n][sequence_index(a, t)], f.components[n][q]));
    }
  }
  return out;
}

TemplicialMorphism cprime_morphism(const PrecatMorphism& m, const PrecatData& p, const PrecatData& q) {
  const std::size_t s = p.vertices.size(), t = q.vertices.size();
  const auto& f = m.vertex_map;
  if (f.source_count() != s || f.target_count() != t) throw std::invalid_argument("cprime_morphism: vertex map shape");
  const InnerSums ps(p), qs(q);
  TemplicialMorphism out{f, {}};
  for (std::size_t n = 0; n <= p.truncation; ++n) {
    const Quiver src = ps.level(p, n);
    const Quiver tgt = quiver::pullback(f, qs.level(q, n), p.vertices);
    std::vector<Morphism> comps;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b) {
        std::vector<Morphism> legs;
        for (const auto& path : ps.paths[n][a * s + b]) {
          Sequence image = path;
          for (auto& v : image) v = f(v);
          legs.push_back(vcat::compose(qs.injection(image), m.components[n][sequence_index(path, s)]));
        }
        comps.push_back(vcat::copair(legs, tgt(a, b)));
      }
    out.components.emplace_back(src, tgt, std::move(comps));
  }
  return out;
}

BasedColax leinster_based(const PrecatData& p) {
  const auto x = simpson_forward(p);
  BasedColax out;
  out.underlying = nerve::leinster_forward(x);
  out.base = p.vertices;
  std::vector<std::size_t> id(p.vertices.size());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
  out.base_iso = Morphism::function(x.levels[0], vcat::free_object(p.instance, p.vertices.size()), std::move(id));
  return out;
}

namespace {

// The unique u : source(h) -> E with e . u = h must exist and be invertible.
bool canonical_iso(const Morphism& e, const Morphism& h) {
  try {
    return vcat::is_iso(vcat::factor_through_mono(e, h));
  } catch (const vcat::FactorizationError&) {
    return false;
  }
}

Object random_set(gen::Rng& rng, std::size_t max) {
  return Object::set(std::uniform_int_distribution<std::size_t>(0, max)(rng));
}

Morphism random_function(gen::Rng& rng, const Object& a, const Object& b) {
  std::vector<std::size_t> t(a.size());
  if (b.size() == 0) return Morphism::function(Object::set(0), b, {});
  for (auto& v : t) v = std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng);
  return Morphism::function(a, b, std::move(t));
}

}  // namespace

Report disj_properties_finset(std::uint64_t seed, std::size_t cases) {
  gen::Rng rng(seed);
  Report r;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::string where = "case " + std::to_string(c);
    std::uniform_int_distribution<std::size_t> copies_d(1, 3);
    const std::size_t k = copies_d(rng);

    // Coprojections are disjoint monos.
    std::vector<Object> fam;
    for (std::size_t i = 0; i < k; ++i) fam.push_back(random_set(rng, 3));
    const auto sum = vcat::coproduct(fam, vcat::Instance::sets());
    for (std::size_t i = 0; i < k; ++i) {
      r.check(vcat::is_mono(sum.injections[i]), "coprojection-mono", [&] { return where; });
      for (std::size_t j = i + 1; j < k; ++j) {
        const Object prod = vcat::tensor(fam[i], fam[j]);
        const auto eq = vcat::equalizer(vcat::compose(sum.injections[i], vcat::project_first(fam[i], fam[j])),
                                        vcat::compose(sum.injections[j], vcat::project_second(fam[i], fam[j])));
        r.check(eq.object.size() == 0 && prod.size() == fam[i].size() * fam[j].size(), "coproduct-disjoint",
                [&] { return where; });
      }
    }

    // Coproducts of decomposing equalizers against a fixed coprojection.
    const std::size_t s = copies_d(rng), j = std::uniform_int_distribution<std::size_t>(0, s - 1)(rng);
    std::vector<Morphism> fs, iotas, incs;
    for (std::size_t m = 0; m < k; ++m) {
      const Object a = random_set(rng, 3);
      fs.push_back(gen::random_decomposing(rng, vcat::Instance::sets(), a, s));
      iotas.push_back(vcat::coprojection(a, s, j));
      incs.push_back(vcat::equalizer(fs.back(), iotas.back()).inclusion);
    }
    const auto big = vcat::equalizer(vcat::direct_sum(fs, vcat::Instance::sets()),
                                     vcat::direct_sum(iotas, vcat::Instance::sets()));
    r.check(canonical_iso(big.inclusion, vcat::direct_sum(incs, vcat::Instance::sets())), "coproduct-equalizer",
            [&] { return where; });

    // Products preserve equalizers.
    const Object a = random_set(rng, 4), b = random_set(rng, 3), cobj = random_set(rng, 3);
    const Morphism f = random_function(rng, a, b), g = random_function(rng, a, b);
    const auto e = vcat::equalizer(f, g);
    const auto id = vcat::identity(cobj);
    const auto ec = vcat::equalizer(vcat::tensor(f, id), vcat::tensor(g, id));
    r.check(canonical_iso(ec.inclusion, vcat::tensor(e.inclusion, id)), "product-equalizer", [&] { return where; });
  }
  return r;
}

Report decomposing_properties_matmod(std::uint64_t seed, std::size_t cases) {
  gen::Rng rng(seed);
  Report r;
  const auto inst = vcat::Instance::modules();
  for (std::size_t c = 0; c < cases; ++c) {
    const std::string where = "case " + std::to_string(c);
    const std::size_t rank = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, s - 1)(rng);
    const Object a = Object::module(rank);
    const Morphism f = gen::random_decomposing(rng, inst, a, s);
    r.check(compare::is_decomposing(f, s).decomposing(), "generated-decomposing", [&] { return where; });
    const auto split = compare::split_equalizer_witness(f, s, j);
    r.check(split.verified, "split-equalizer", [&] { return where; });

    const Object cobj = Object::module(std::uniform_int_distribution<std::size_t>(0, 2)(rng));
    const auto id = vcat::identity(cobj);
    const auto iota = vcat::coprojection(a, s, j);
    const auto right = vcat::equalizer(vcat::tensor(f, id), vcat::tensor(iota, id));
    r.check(canonical_iso(right.inclusion, vcat::tensor(split.inclusion, id)), "tensor-equalizer-right",
            [&] { return where; });
    const auto left = vcat::equalizer(vcat::tensor(id, f), vcat::tensor(id, iota));
    r.check(canonical_iso(left.inclusion, vcat::tensor(id, split.inclusion)), "tensor-equalizer-left",
            [&] { return where; });
  }
  return r;
}

}  // namespace templ::precat
