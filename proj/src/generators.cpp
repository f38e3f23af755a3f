#include "templ/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "templ/precat.hpp"

namespace templ::gen {

using quiver::QuiverMorphism;
using vcat::Morphism;
using vcat::Object;

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

}  // namespace

Matrix random_invertible(Rng& rng, std::size_t n, Field field) {
  Matrix l = Matrix::identity(n, field), u = Matrix::identity(n, field);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l.set(i, j, Rational(entry(rng)));
      u.set(j, i, Rational(entry(rng)));
    }
  return l * u;
}

Morphism random_decomposing(Rng& rng, vcat::Instance inst, const Object& a, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("random_decomposing: no copies");
  const std::size_t n = a.size();
  std::vector<std::size_t> sigma(n);
  for (auto& v : sigma) v = pick(rng, 0, copies - 1);
  const Object target = Object::of(inst, copies * n);
  if (inst.kind == vcat::Kind::finset) {
    std::vector<std::size_t> t(n);
    for (std::size_t x = 0; x < n; ++x) t[x] = sigma[x] * n + x;
    return Morphism::function(a, target, std::move(t));
  }
  // Projections Q E_i Q^{-1} onto the images of the basis vectors assigned to i.
  const Matrix q = random_invertible(rng, n, inst.field);
  const Matrix qi = *inverse(q);
  Matrix f(copies * n, n, inst.field);
  for (std::size_t i = 0; i < copies; ++i) {
    Matrix e(n, n, inst.field);
    for (std::size_t x = 0; x < n; ++x)
      if (sigma[x] == i) e.set(x, x, 1);
    const Matrix p = q * e * qi;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) f.set(i * n + r, c, p(r, c));
  }
  return Morphism::linear(a, target, std::move(f));
}

namespace {

// A candidate category: hom sizes and a composition table; element 0 of each
// endo-hom is the identity.
struct Table {
  std::size_t n = 0;
  std::vector<std::size_t> sizes;                      // [a*n+b]
  std::map<std::array<std::size_t, 5>, std::size_t> comp;  // (a,b,c,f,g) -> g.f

  std::size_t hom(std::size_t a, std::size_t b) const { return sizes[a * n + b]; }
  std::size_t get(std::size_t a, std::size_t b, std::size_t c, std::size_t f, std::size_t g) const {
    if (a == b && f == 0) return g;
    if (b == c && g == 0) return f;
    return comp.at({a, b, c, f, g});
  }
  bool associative() const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d)
            for (std::size_t f = 0; f < hom(a, b); ++f)
              for (std::size_t g = 0; g < hom(b, c); ++g)
                for (std::size_t h = 0; h < hom(c, d); ++h)
                  if (get(a, c, d, get(a, b, c, f, g), h) != get(a, b, d, f, get(b, c, d, g, h))) return false;
    return true;
  }
  // Relabel objects by p and swap the two elements of each flagged off-diagonal hom.
  std::vector<std::size_t> encode(const std::vector<std::size_t>& p, const std::vector<bool>& swap) const {
    auto rel = [&](std::size_t a, std::size_t b, std::size_t f) {
      return a != b && swap[a * n + b] ? hom(a, b) - 1 - f : f;
    };
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a) inv[p[a]] = a;
    std::vector<std::size_t> code;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) code.push_back(hom(inv[a], inv[b]));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t oa = inv[a], ob = inv[b], oc = inv[c];
          // Enumerate in new labels: new element f of (a,b) is old rel(f).
          for (std::size_t f = 0; f < hom(oa, ob); ++f)
            for (std::size_t g = 0; g < hom(ob, oc); ++g)
              code.push_back(rel(oa, oc, get(oa, ob, oc, rel(oa, ob, f), rel(ob, oc, g))));
        }
    return code;
  }
  std::vector<std::size_t> canonical() const {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::size_t> best;
    do {
      for (std::size_t mask = 0; mask < (std::size_t{1} << (n * n)); ++mask) {
        std::vector<bool> swap(n * n);
        bool valid = true;
        for (std::size_t i = 0; i < n * n; ++i) {
          swap[i] = (mask >> i) & 1u;
          if (swap[i] && (i / n == i % n || sizes[i] < 2)) valid = false;
        }
        if (!valid) continue;
        auto code = encode(p, swap);
        if (best.empty() || code < best) best = std::move(code);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }
};

void enumerate_tables(Table t, std::vector<std::array<std::size_t, 5>>& free, std::size_t pos,
                      std::set<std::vector<std::size_t>>& seen, std::vector<nerve::FiniteCategory>& out) {
  if (pos == free.size()) {
    if (!t.associative()) return;
    if (!seen.insert(t.canonical()).second) return;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < t.n; ++a) names.push_back(std::string(1, static_cast<char>('x' + a)));
    out.push_back(nerve::finite_category(
        names, t.sizes, [&](std::size_t a, std::size_t b, std::size_t c, std::size_t f, std::size_t g) {
          return t.get(a, b, c, f, g);
        },
        std::vector<std::size_t>(t.n, 0)));
    return;
  }
  const auto& k = free[pos];
  for (std::size_t v = 0; v < t.hom(k[0], k[2]); ++v) {
    t.comp[k] = v;
    enumerate_tables(t, free, pos + 1, seen, out);
  }
}

}  // namespace

std::vector<nerve::FiniteCategory> small_categories(std::size_t max_objects, std::size_t max_hom) {
  std::vector<nerve::FiniteCategory> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t n = 1; n <= max_objects; ++n) {
    std::vector<std::size_t> sizes(n * n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < n; ++a) ok = ok && sizes[a * n + a] >= 1;
      Table t{n, sizes, {}};
      std::vector<std::array<std::size_t, 5>> free;
      for (std::size_t a = 0; ok && a < n; ++a)
        for (std::size_t b = 0; ok && b < n; ++b)
          for (std::size_t c = 0; ok && c < n; ++c)
            for (std::size_t f = a == b ? 1 : 0; f < t.hom(a, b); ++f)
              for (std::size_t g = b == c ? 1 : 0; g < t.hom(b, c); ++g) {
                if (t.hom(a, c) == 0) ok = false;
                free.push_back({a, b, c, f, g});
              }
      if (ok) enumerate_tables(t, free, 0, seen, out);
      std::size_t pos = n * n;
      while (pos > 0 && sizes[pos - 1] == max_hom) sizes[--pos] = 0;
      if (pos == 0) break;
      ++sizes[pos - 1];
    }
  }
  return out;
}

TruncatedSimplicial random_quotient(Rng& rng, std::size_t k, std::size_t truncation, std::size_t identifications) {
  const TruncatedSimplicial x = nerve::standard_simplex(k, truncation);
  const std::size_t N = truncation;
  std::vector<std::vector<std::size_t>> parent(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    parent[n].resize(x.levels[n].size());
    std::iota(parent[n].begin(), parent[n].end(), 0);
  }
  auto find = [&](std::size_t n, std::size_t e) {
    while (parent[n][e] != e) e = parent[n][e] = parent[n][parent[n][e]];
    return e;
  };
  auto unite = [&](std::size_t n, std::size_t a, std::size_t b) {
    a = find(n, a);
    b = find(n, b);
    if (a == b) return false;
    parent[n][std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (std::size_t r = 0; r < identifications; ++r) {
    const std::size_t n = pick(rng, 0, N);
    const std::size_t sz = x.levels[n].size();
    unite(n, pick(rng, 0, sz - 1), pick(rng, 0, sz - 1));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t e = 0; e < x.levels[n].size(); ++e) {
        const std::size_t rep = find(n, e);
        if (rep == e) continue;
        if (n >= 1)
          for (std::size_t j = 0; j <= n; ++j) changed |= unite(n - 1, x.d(n, j)(e), x.d(n, j)(rep));
        if (n < N)
          for (std::size_t i = 0; i <= n; ++i) changed |= unite(n + 1, x.s(n, i)(e), x.s(n, i)(rep));
      }
  }
  std::vector<std::vector<std::size_t>> cls(N + 1);
  TruncatedSimplicial q;
  q.allocate(N);
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<std::size_t> number(x.levels[n].size(), SIZE_MAX);
    std::size_t count = 0;
    cls[n].resize(x.levels[n].size());
    for (std::size_t e = 0; e < x.levels[n].size(); ++e) {
      const std::size_t rep = find(n, e);
      if (number[rep] == SIZE_MAX) number[rep] = count++;
      cls[n][e] = number[rep];
    }
    q.levels[n] = Object::set(count);
  }
  // Representatives: the first simplex of each class.
  auto table = [&](const Morphism& m, std::size_t from, std::size_t to) {
    std::vector<std::size_t> t(q.levels[from].size(), SIZE_MAX);
    for (std::size_t e = 0; e < x.levels[from].size(); ++e)
      if (t[cls[from][e]] == SIZE_MAX) t[cls[from][e]] = cls[to][m(e)];
    return Morphism::function(q.levels[from], q.levels[to], std::move(t));
  };
  for (std::size_t n = 0; n <= N; ++n) {
    if (n >= 1)
      for (std::size_t j = 0; j <= n; ++j) q.d(n, j) = table(x.d(n, j), n, n - 1);
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i) q.s(n, i) = table(x.s(n, i), n, n + 1);
  }
  // Each vertex keeps the label of its first representative.
  q.base.assign(q.levels[0].size(), {});
  for (std::size_t e = x.levels[0].size(); e-- > 0;) q.base[cls[0][e]] = x.base[e];
  return q;
}

TruncatedSimplicial random_simplicial(Rng& rng, std::size_t truncation) {
  if (pick(rng, 0, 1) == 0) {
    static const auto cats = small_categories(2, 2);
    return nerve::nerve_classical(cats[pick(rng, 0, cats.size() - 1)], truncation);
  }
  const std::size_t k = pick(rng, 1, 2);
  return random_quotient(rng, k, truncation, pick(rng, 0, 2));
}

std::vector<QuiverMorphism> random_basis_change(Rng& rng, const TruncatedTemplicial& x) {
  std::vector<QuiverMorphism> phi;
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    std::vector<Morphism> comps;
    for (const auto& o : x.level(n).components())
      comps.push_back(Morphism::linear(o, o, random_invertible(rng, o.size(), o.field())));
    phi.emplace_back(x.level(n), x.level(n), std::move(comps));
  }
  return phi;
}

TruncatedTemplicial random_templicial(Rng& rng, vcat::Instance inst, std::size_t truncation) {
  TruncatedTemplicial x = precat::cprime(precat::simpson_backward(random_simplicial(rng, truncation)));
  const std::size_t s = x.vertices.size();
  std::vector<std::size_t> p(s);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  x = permute_vertices(x, p);
  if (inst.kind == vcat::Kind::finset) return x;
  x = linearize(x, inst.field);
  return transport(x, random_basis_change(rng, x));
}

}  // namespace templ::gen
