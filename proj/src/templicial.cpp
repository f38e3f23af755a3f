#include "templ/templicial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "templ/kernels.hpp"

namespace templ {

using quiver::Quiver;
using quiver::QuiverMorphism;
using quiver::VertexMap;
using vcat::Morphism;
using vcat::Object;

Report check_templicial(const TruncatedTemplicial& x) {
  Report r;
  const std::size_t n = x.vertices.size();
  for (std::size_t k = 0; k < x.data.levels.size(); ++k)
    if (!r.check(x.data.levels[k].vertex_count() == n && x.data.levels[k].instance() == x.instance, "shape",
                 [&] { return "level " + std::to_string(k) + " has the wrong vertex set or instance"; }))
      return r;
  r.merge(check_colax_laws(x.monoidal(), x.data));
  if (r.has_failure("shape")) return r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r.check(vcat::is_iso(x.data.counit(a, b)), "strong-unitality",
              [&] { return "counit at (" + x.vertices[a] + "," + x.vertices[b] + ")"; });
  return r;
}

Report check_templicial_morphism(const TemplicialMorphism& m, const TruncatedTemplicial& x,
                                 const TruncatedTemplicial& y) {
  using detail::at;
  Report r;
  const auto& f = m.vertex_map;
  const auto& sv = x.vertices;
  const std::size_t N = x.truncation();
  if (!r.check(f.source_count() == sv.size() && f.target_count() == y.vertices.size(), "morphism-shape",
               [] { return std::string("vertex map"); }))
    return r;
  for (auto v : f.images)
    if (!r.check(v < y.vertices.size(), "morphism-shape", [] { return std::string("vertex map image"); })) return r;
  if (!r.check(y.truncation() == N && m.components.size() == N + 1, "morphism-shape",
               [] { return std::string("truncation"); }))
    return r;
  std::vector<Quiver> pulled;
  for (std::size_t n = 0; n <= N; ++n) {
    pulled.push_back(quiver::pullback(f, y.level(n), sv));
    if (!r.check(m.components[n].source() == x.level(n) && m.components[n].target() == pulled[n], "morphism-shape",
                 [&] { return at({{"n", n}}); }))
      return r;
  }
  using M = QuiverMonoidal;
  const auto& a = m.components;
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j < n; ++j)
      detail::expect_equal<M>(r, quiver::compose(a[n - 1], x.data.d(n, j)),
                              quiver::compose(quiver::pullback(f, y.data.d(n, j), sv), a[n]), "morphism-face",
                              [&] { return at({{"n", n}, {"j", j}}); });
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      detail::expect_equal<M>(r, quiver::compose(a[n + 1], x.data.s(n, i)),
                              quiver::compose(quiver::pullback(f, y.data.s(n, i), sv), a[n]), "morphism-degeneracy",
                              [&] { return at({{"n", n}, {"i", i}}); });
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l) {
      auto lhs = quiver::compose(quiver::pullback(f, y.data.mu(k, l), sv), a[k + l]);
      auto rhs = quiver::compose(quiver::pullback_lax(f, y.level(k), y.level(l), sv),
                                 quiver::compose(quiver::qtensor(a[k], a[l]), x.data.mu(k, l)));
      detail::expect_equal<M>(r, lhs, rhs, "morphism-comult", [&] { return at({{"k", k}, {"l", l}}); });
    }
  detail::expect_equal<M>(r, quiver::compose(quiver::pullback(f, y.data.counit, sv), a[0]),
                          quiver::compose(quiver::pullback_unit(f, sv, x.instance), x.data.counit), "morphism-counit",
                          [] { return std::string{}; });
  return r;
}

TemplicialMorphism identity_morphism(const TruncatedTemplicial& x) {
  TemplicialMorphism m{quiver::identity_map(x.vertices), {}};
  for (const auto& q : x.data.levels) m.components.push_back(quiver::identity(q));
  return m;
}

TemplicialMorphism compose(const TemplicialMorphism& beta, const TemplicialMorphism& alpha,
                           const TruncatedTemplicial& x) {
  TemplicialMorphism m{quiver::compose(beta.vertex_map, alpha.vertex_map), {}};
  for (std::size_t n = 0; n < alpha.components.size(); ++n)
    m.components.push_back(
        quiver::compose(quiver::pullback(alpha.vertex_map, beta.components[n], x.vertices), alpha.components[n]));
  return m;
}

bool is_iso(const TemplicialMorphism& m) {
  std::vector<std::size_t> imgs = m.vertex_map.images;
  std::sort(imgs.begin(), imgs.end());
  if (m.vertex_map.source_count() != m.vertex_map.target_count()) return false;
  if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) return false;
  return std::all_of(m.components.begin(), m.components.end(), [](const auto& c) { return quiver::is_iso(c); });
}

std::string to_string(IsoSearchResult::Status s) {
  switch (s) {
    case IsoSearchResult::Status::witness: return "witness";
    case IsoSearchResult::Status::obstruction: return "obstruction";
    default: return "inconclusive";
  }
}

namespace {

// Y pulled back along a vertex bijection p : S -> T, so that a templicial
// iso X -> Y over p is an iso X -> p^*Y over the identity.
TruncatedTemplicial pull_along_bijection(const TruncatedTemplicial& y, const VertexMap& p,
                                         const std::vector<std::string>& sv) {
  TruncatedTemplicial z;
  z.vertices = sv;
  z.instance = y.instance;
  const std::size_t N = y.truncation();
  z.data.allocate(N);
  for (std::size_t n = 0; n <= N; ++n) {
    z.data.levels[n] = quiver::pullback(p, y.level(n), sv);
    for (std::size_t j = 1; j < n; ++j) z.data.d(n, j) = quiver::pullback(p, y.data.d(n, j), sv);
    if (n < N)
      for (std::size_t i = 0; i <= n; ++i) z.data.s(n, i) = quiver::pullback(p, y.data.s(n, i), sv);
  }
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t l = 0; k + l <= N; ++l)
      z.data.mu(k, l) = quiver::compose(quiver::inverse(quiver::pullback_lax(p, y.level(k), y.level(l), sv)),
                                        quiver::pullback(p, y.data.mu(k, l), sv));
  z.data.counit = quiver::compose(quiver::inverse(quiver::pullback_unit(p, sv, y.instance)),
                                  quiver::pullback(p, y.data.counit, sv));
  return z;
}

// One summand P . A . Q of a linear constraint on the unknown matrix A.
struct Term {
  Matrix left;
  Matrix right;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Matrix rhs;
};

class IsoSearch {
 public:
  IsoSearch(const TruncatedTemplicial& x, const TruncatedTemplicial& y, const IsoSearchOptions& opt)
      : x_(x), y_(y), opt_(opt), n_(x.vertices.size()), alpha_(x.truncation() + 1) {
    for (auto& level : alpha_) level.resize(n_ * n_);
  }

  bool run() { return step(0, 0); }
  bool exhaustive() const { return exhaustive_; }
  std::vector<QuiverMorphism> components() const {
    std::vector<QuiverMorphism> out;
    for (std::size_t n = 0; n < alpha_.size(); ++n) out.emplace_back(x_.level(n), y_.level(n), alpha_[n]);
    return out;
  }

 private:
  bool step(std::size_t level, std::size_t idx) {
    if (++nodes_ > opt_.node_budget) {
      exhaustive_ = false;
      return false;
    }
    if (idx == n_ * n_) {
      if (level == x_.truncation()) return verify();
      return step(level + 1, 0);
    }
    const std::size_t a = idx / n_, b = idx % n_;
    for (auto& c : candidates(level, a, b)) {
      alpha_[level][idx] = std::move(c);
      if (step(level, idx + 1)) return true;
    }
    return false;
  }

  bool verify() {
    TemplicialMorphism m{quiver::identity_map(x_.vertices), components()};
    return check_templicial_morphism(m, x_, y_).passed();
  }

  // (alpha_k (x) alpha_l)(a,b)
  Morphism tensor_at(std::size_t k, std::size_t l, std::size_t a, std::size_t b) const {
    std::vector<Morphism> blocks;
    for (std::size_t c = 0; c < n_; ++c) blocks.push_back(vcat::tensor(alpha_[k][a * n_ + c], alpha_[l][c * n_ + b]));
    return vcat::direct_sum(blocks, x_.instance);
  }

  std::vector<Morphism> candidates(std::size_t level, std::size_t a, std::size_t b) {
    const Object& xs = x_.level(level)(a, b);
    const Object& ys = y_.level(level)(a, b);
    if (xs.size() != ys.size()) return {};
    if (level == 0) {
      if (a != b) return xs.size() == 0 ? std::vector<Morphism>{vcat::zero_map(xs, ys)} : std::vector<Morphism>{};
      // Forced by the counits.
      if (!vcat::is_iso(x_.data.counit(a, a)) || !vcat::is_iso(y_.data.counit(a, a))) return {};
      return {vcat::compose(vcat::inverse(y_.data.counit(a, a)), x_.data.counit(a, a))};
    }
    return x_.instance.kind == vcat::Kind::finset ? set_candidates(level, a, b) : linear_candidates(level, a, b);
  }

  std::vector<Morphism> set_candidates(std::size_t n, std::size_t a, std::size_t b) {
    const Object& xs = x_.level(n)(a, b);
    const Object& ys = y_.level(n)(a, b);
    const std::size_t size = xs.size();
    const std::size_t k = a * n_ + b;
    std::vector<std::vector<char>> allowed(size, std::vector<char>(size, 1));
    for (std::size_t j = 1; j < n; ++j) {
      const auto& dx = x_.data.d(n, j).components()[k].table();
      const auto& dy = y_.data.d(n, j).components()[k].table();
      const auto& low = alpha_[n - 1][k].table();
      for (std::size_t u = 0; u < size; ++u)
        for (std::size_t v = 0; v < size; ++v)
          if (dy[v] != low[dx[u]]) allowed[u][v] = 0;
    }
    for (std::size_t p = 1; p < n; ++p) {
      const auto t = tensor_at(p, n - p, a, b);
      const auto& mx = x_.data.mu(p, n - p).components()[k].table();
      const auto& my = y_.data.mu(p, n - p).components()[k].table();
      for (std::size_t u = 0; u < size; ++u)
        for (std::size_t v = 0; v < size; ++v)
          if (my[v] != t.table()[mx[u]]) allowed[u][v] = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& sx = x_.data.s(n - 1, i).components()[k].table();
      const auto& sy = y_.data.s(n - 1, i).components()[k].table();
      const auto& low = alpha_[n - 1][k].table();
      for (std::size_t w = 0; w < sx.size(); ++w) {
        const std::size_t forced = sy[low[w]];
        for (std::size_t v = 0; v < size; ++v)
          if (v != forced) allowed[sx[w]][v] = 0;
      }
    }
    std::vector<Morphism> out;
    std::vector<std::size_t> table(size);
    std::vector<char> used(size, 0);
    bool capped = false;
    auto assign = [&](auto&& self, std::size_t u) -> void {
      if (capped) return;
      if (u == size) {
        if (out.size() >= opt_.candidates_per_level) {
          capped = true;
          return;
        }
        out.push_back(Morphism::function(xs, ys, table));
        return;
      }
      for (std::size_t v = 0; v < size; ++v) {
        if (!allowed[u][v] || used[v]) continue;
        used[v] = 1;
        table[u] = v;
        self(self, u + 1);
        used[v] = 0;
      }
    };
    assign(assign, 0);
    if (capped) exhaustive_ = false;
    return out;
  }

  std::vector<Morphism> linear_candidates(std::size_t n, std::size_t a, std::size_t b) {
    const Object& xs = x_.level(n)(a, b);
    const Object& ys = y_.level(n)(a, b);
    const Field field = x_.instance.field;
    const std::size_t k = a * n_ + b;
    const std::size_t rows = ys.size(), cols = xs.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t j = 1; j < n; ++j)
      cons.push_back({{{y_.data.d(n, j).components()[k].matrix(), Matrix::identity(cols, field)}},
                      alpha_[n - 1][k].matrix() * x_.data.d(n, j).components()[k].matrix()});
    for (std::size_t i = 0; i < n; ++i)
      cons.push_back({{{Matrix::identity(rows, field), x_.data.s(n - 1, i).components()[k].matrix()}},
                      y_.data.s(n - 1, i).components()[k].matrix() * alpha_[n - 1][k].matrix()});
    for (std::size_t p = 1; p < n; ++p)
      cons.push_back({{{y_.data.mu(p, n - p).components()[k].matrix(), Matrix::identity(cols, field)}},
                      tensor_at(p, n - p, a, b).matrix() * x_.data.mu(p, n - p).components()[k].matrix()});
    {
      // mu_{0,n} and mu_{n,0}: the level-0 factor is the scalar alpha_0 at the endpoint.
      const Rational la = alpha_[0][a * n_ + a].matrix()(0, 0);
      const Rational lb = alpha_[0][b * n_ + b].matrix()(0, 0);
      const Matrix& mx0 = x_.data.mu(0, n).components()[k].matrix();
      const Matrix& my0 = y_.data.mu(0, n).components()[k].matrix();
      cons.push_back({{{my0, Matrix::identity(cols, field)}, {Matrix::identity(rows, field).scaled(field.neg(la)), mx0}},
                      Matrix(my0.rows(), cols, field)});
      const Matrix& mxn = x_.data.mu(n, 0).components()[k].matrix();
      const Matrix& myn = y_.data.mu(n, 0).components()[k].matrix();
      cons.push_back({{{myn, Matrix::identity(cols, field)}, {Matrix::identity(rows, field).scaled(field.neg(lb)), mxn}},
                      Matrix(myn.rows(), cols, field)});
    }
    // Stack every constraint as equations on vec(A), A row-major.
    std::size_t eqs = 0;
    for (const auto& c : cons) eqs += c.rhs.rows() * c.rhs.cols();
    Matrix sys(eqs, rows * cols, field), rhs(eqs, 1, field);
    std::size_t row = 0;
    for (const auto& c : cons) {
      for (std::size_t u = 0; u < c.rhs.rows(); ++u)
        for (std::size_t v = 0; v < c.rhs.cols(); ++v, ++row) {
          rhs.raw(row, 0) = c.rhs(u, v);
          for (const auto& t : c.terms)
            for (std::size_t i = 0; i < rows; ++i) {
              if (t.left(u, i) == 0) continue;
              for (std::size_t j = 0; j < cols; ++j) {
                if (t.right(j, v) == 0) continue;
                sys.raw(row, i * cols + j) = field.add(sys(row, i * cols + j), field.mul(t.left(u, i), t.right(j, v)));
              }
            }
        }
    }
    auto particular = solve(sys, rhs);
    if (!particular) return {};
    Matrix kernel = nullspace(sys);
    const std::size_t free = kernel.cols();

    std::vector<std::vector<Rational>> coefficient_sets;
    const std::uint32_t p = field.characteristic();
    bool full = false;
    if (free == 0) {
      coefficient_sets.push_back({});
      full = true;
    } else if (p != 0 && free <= opt_.exhaustive_free_limit) {
      double count = std::pow(static_cast<double>(p), static_cast<double>(free));
      if (count <= static_cast<double>(opt_.candidates_per_level)) {
        std::vector<Rational> c(free, 0);
        while (true) {
          coefficient_sets.push_back(c);
          std::size_t pos = 0;
          while (pos < free && c[pos] == p - 1) c[pos++] = 0;
          if (pos == free) break;
          c[pos] += 1;
        }
        full = true;
      }
    }
    if (coefficient_sets.empty()) {
      // Zero/one combinations by increasing support size.
      for (std::size_t weight = 0; weight <= free && coefficient_sets.size() < opt_.candidates_per_level; ++weight) {
        std::vector<char> pick(free, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(weight), 1);
        do {
          std::vector<Rational> c(free, 0);
          for (std::size_t t = 0; t < free; ++t) c[t] = pick[t];
          coefficient_sets.push_back(std::move(c));
        } while (coefficient_sets.size() < opt_.candidates_per_level &&
                 std::prev_permutation(pick.begin(), pick.end()));
      }
      const bool all_binary = free < 63 && coefficient_sets.size() == (std::size_t{1} << free);
      full = all_binary && p == 2;
    }
    if (!full) exhaustive_ = false;

    std::vector<Morphism> out;
    for (const auto& c : coefficient_sets) {
      Matrix v = *particular;
      for (std::size_t t = 0; t < free; ++t)
        if (c[t] != 0)
          for (std::size_t e = 0; e < v.rows(); ++e) v.raw(e, 0) = field.add(v(e, 0), field.mul(c[t], kernel(e, t)));
      Matrix m(rows, cols, field);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.raw(i, j) = v(i * cols + j, 0);
      if (rank(m) != rows) continue;
      out.push_back(Morphism::linear(xs, ys, std::move(m)));
    }
    return out;
  }

  const TruncatedTemplicial& x_;
  const TruncatedTemplicial& y_;
  const IsoSearchOptions& opt_;
  std::size_t n_;
  std::vector<std::vector<Morphism>> alpha_;
  std::size_t nodes_ = 0;
  bool exhaustive_ = true;
};

bool sizes_match(const TruncatedTemplicial& x, const TruncatedTemplicial& y, const std::vector<std::size_t>& p) {
  const std::size_t n = x.vertices.size();
  for (std::size_t k = 0; k <= x.truncation(); ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (x.level(k)(a, b).size() != y.level(k)(p[a], p[b]).size()) return false;
  return true;
}

}  // namespace

IsoSearchResult templicial_iso_check(const TruncatedTemplicial& x, const TruncatedTemplicial& y,
                                     const IsoSearchOptions& options) {
  IsoSearchResult res;
  if (x.vertices.size() != y.vertices.size()) {
    res.status = IsoSearchResult::Status::obstruction;
    res.reason = "vertex sets have different sizes";
    return res;
  }
  if (x.truncation() != y.truncation() || !(x.instance == y.instance)) {
    res.status = IsoSearchResult::Status::obstruction;
    res.reason = "truncations or instances differ";
    return res;
  }
  const std::size_t n = x.vertices.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> bijections;
  do {
    if (sizes_match(x, y, perm)) bijections.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (bijections.empty()) {
    res.status = IsoSearchResult::Status::obstruction;
    res.reason = "component sizes differ under every vertex bijection";
    return res;
  }
  struct Outcome {
    bool found = false;
    bool exhaustive = true;
    std::vector<QuiverMorphism> components;
  };
  std::vector<Outcome> outcomes(bijections.size());
  kernels::for_each_index(bijections.size(), [&](std::size_t t) {
    VertexMap p{bijections[t], y.vertices};
    TruncatedTemplicial pulled = pull_along_bijection(y, p, x.vertices);
    IsoSearch search(x, pulled, options);
    outcomes[t].found = search.run();
    outcomes[t].exhaustive = search.exhaustive();
    if (outcomes[t].found) outcomes[t].components = search.components();
  });
  res.bijections_tried = bijections.size();
  bool exhaustive = true;
  for (std::size_t t = 0; t < bijections.size(); ++t) {
    if (outcomes[t].found) {
      TemplicialMorphism w{{bijections[t], y.vertices}, std::move(outcomes[t].components)};
      Report check = check_templicial_morphism(w, x, y);
      if (check.passed() && is_iso(w)) {
        res.status = IsoSearchResult::Status::witness;
        res.witness = std::move(w);
        return res;
      }
    }
    exhaustive = exhaustive && outcomes[t].exhaustive;
  }
  res.status = exhaustive ? IsoSearchResult::Status::obstruction : IsoSearchResult::Status::inconclusive;
  res.reason = exhaustive ? "no isomorphism over any size-compatible vertex bijection (exhaustive)"
                          : "search space exceeded the configured budget";
  return res;
}

namespace {

class MorphismEnumerator {
 public:
  MorphismEnumerator(const TruncatedTemplicial& x, const TruncatedTemplicial& y, VertexMap f, std::size_t limit,
                     std::vector<TemplicialMorphism>& out)
      : x_(x), y_(y), f_(std::move(f)), n_(x.vertices.size()), m_(y.vertices.size()), limit_(limit), out_(out),
        alpha_(x.truncation() + 1) {
    for (auto& level : alpha_) level.resize(n_ * n_);
    const std::size_t N = x.truncation();
    lax_.resize(N + 1);
    for (std::size_t p = 0; p <= N; ++p)
      for (std::size_t q = 0; p + q <= N; ++q)
        lax_[p].push_back(quiver::pullback_lax(f_, y.level(p), y.level(q), x.vertices));
    for (std::size_t k = 0; k <= N; ++k) targets_.push_back(quiver::pullback(f_, y.level(k), x.vertices));
  }

  void run() { step(0, 0); }

 private:
  bool full() const { return out_.size() >= limit_; }

  void step(std::size_t level, std::size_t idx) {
    if (full()) return;
    if (idx == n_ * n_) {
      if (level == x_.truncation()) {
        TemplicialMorphism m{f_, {}};
        for (std::size_t k = 0; k < alpha_.size(); ++k) m.components.emplace_back(x_.level(k), targets_[k], alpha_[k]);
        if (check_templicial_morphism(m, x_, y_).passed()) out_.push_back(std::move(m));
        return;
      }
      step(level + 1, 0);
      return;
    }
    const std::size_t a = idx / n_, b = idx % n_;
    const std::size_t ft = f_(a) * m_ + f_(b);
    const Object& xs = x_.level(level)(a, b);
    const Object& ys = y_.level(level)(f_(a), f_(b));
    std::vector<std::vector<char>> allowed(xs.size(), std::vector<char>(ys.size(), 1));
    if (level > 0) {
      const auto& low = alpha_[level - 1][idx].table();
      for (std::size_t j = 1; j < level; ++j) {
        const auto& dx = x_.data.d(level, j).components()[idx].table();
        const auto& dy = y_.data.d(level, j).components()[ft].table();
        for (std::size_t u = 0; u < xs.size(); ++u)
          for (std::size_t v = 0; v < ys.size(); ++v)
            if (dy[v] != low[dx[u]]) allowed[u][v] = 0;
      }
      for (std::size_t i = 0; i < level; ++i) {
        const auto& sx = x_.data.s(level - 1, i).components()[idx].table();
        const auto& sy = y_.data.s(level - 1, i).components()[ft].table();
        for (std::size_t w = 0; w < sx.size(); ++w)
          for (std::size_t v = 0; v < ys.size(); ++v)
            if (v != sy[low[w]]) allowed[sx[w]][v] = 0;
      }
      for (std::size_t p = 1; p < level; ++p) {
        const std::size_t q = level - p;
        std::vector<Morphism> blocks;
        for (std::size_t c = 0; c < n_; ++c)
          blocks.push_back(vcat::tensor(alpha_[p][a * n_ + c], alpha_[q][c * n_ + b]));
        const Morphism h = vcat::compose(lax_[p][q].components()[idx],
                                         vcat::compose(vcat::direct_sum(blocks, x_.instance),
                                                       x_.data.mu(p, q).components()[idx]));
        const auto& g = y_.data.mu(p, q).components()[ft].table();
        for (std::size_t u = 0; u < xs.size(); ++u)
          for (std::size_t v = 0; v < ys.size(); ++v)
            if (g[v] != h.table()[u]) allowed[u][v] = 0;
      }
    }
    std::vector<std::size_t> table(xs.size());
    auto assign = [&](auto&& self, std::size_t u) -> void {
      if (full()) return;
      if (u == xs.size()) {
        alpha_[level][idx] = Morphism::function(xs, ys, table);
        step(level, idx + 1);
        return;
      }
      for (std::size_t v = 0; v < ys.size(); ++v) {
        if (!allowed[u][v]) continue;
        table[u] = v;
        self(self, u + 1);
      }
    };
    assign(assign, 0);
  }

  const TruncatedTemplicial& x_;
  const TruncatedTemplicial& y_;
  VertexMap f_;
  std::size_t n_, m_, limit_;
  std::vector<TemplicialMorphism>& out_;
  std::vector<std::vector<Morphism>> alpha_;
  std::vector<std::vector<QuiverMorphism>> lax_;
  std::vector<Quiver> targets_;
};

}  // namespace

std::vector<TemplicialMorphism> enumerate_morphisms(const TruncatedTemplicial& x, const TruncatedTemplicial& y,
                                                    std::size_t limit) {
  if (x.instance.kind != vcat::Kind::finset || y.instance.kind != vcat::Kind::finset)
    throw vcat::InstanceError("enumerate_morphisms needs a finset base");
  std::vector<TemplicialMorphism> out;
  const std::size_t n = x.vertices.size(), m = y.vertices.size();
  if (x.truncation() != y.truncation() || (m == 0 && n > 0)) return out;
  std::vector<std::size_t> images(n, 0);
  while (out.size() < limit) {
    MorphismEnumerator(x, y, {images, y.vertices}, limit, out).run();
    std::size_t pos = n;
    while (pos > 0 && images[pos - 1] + 1 == m) images[--pos] = 0;
    if (pos == 0) break;
    ++images[pos - 1];
  }
  return out;
}

TruncatedTemplicial discrete_templicial(const std::vector<std::string>& vertices, vcat::Instance inst,
                                        std::size_t truncation) {
  TruncatedTemplicial x;
  x.vertices = vertices;
  x.instance = inst;
  x.data.allocate(truncation);
  const Quiver u = quiver::qunit(vertices, inst);
  const QuiverMorphism id = quiver::identity(u);
  for (std::size_t k = 0; k <= truncation; ++k) {
    x.data.levels[k] = u;
    for (auto& f : x.data.faces[k]) f = id;
    for (auto& s : x.data.degeneracies[k]) s = id;
    for (auto& m : x.data.comult[k]) m = id;
  }
  x.data.counit = id;
  return x;
}

namespace {

template <class F>
TruncatedTemplicial map_structure(const TruncatedTemplicial& x, vcat::Instance inst, F&& fm) {
  TruncatedTemplicial z;
  z.vertices = x.vertices;
  z.instance = inst;
  const std::size_t N = x.truncation();
  z.data.allocate(N);
  for (std::size_t k = 0; k <= N; ++k) {
    z.data.levels[k] = fm(quiver::identity(x.level(k))).target();
    for (std::size_t j = 1; j < k; ++j) z.data.d(k, j) = fm(x.data.d(k, j));
    if (k < N)
      for (std::size_t i = 0; i <= k; ++i) z.data.s(k, i) = fm(x.data.s(k, i));
    for (std::size_t l = 0; k + l <= N; ++l) z.data.mu(k, l) = fm(x.data.mu(k, l));
  }
  z.data.counit = fm(x.data.counit);
  return z;
}

}  // namespace

TruncatedTemplicial linearize(const TruncatedTemplicial& x, Field field) {
  const auto inst = vcat::Instance::modules(field);
  return map_structure(x, inst, [&](const QuiverMorphism& f) {
    std::vector<Object> s, t;
    std::vector<Morphism> c;
    for (const auto& m : f.components()) c.push_back(vcat::linearize(m, field));
    for (const auto& o : f.source().components()) s.push_back(vcat::linearize(o, field));
    for (const auto& o : f.target().components()) t.push_back(vcat::linearize(o, field));
    return QuiverMorphism(Quiver(f.source().vertices(), inst, s), Quiver(f.target().vertices(), inst, t), c);
  });
}

TruncatedTemplicial restrict_window(const TruncatedTemplicial& x, std::size_t n) {
  TruncatedTemplicial z = x;
  z.data = templ::restrict_window(x.data, n);
  return z;
}

TruncatedTemplicial transport(const TruncatedTemplicial& x, const std::vector<QuiverMorphism>& phi) {
  const std::size_t N = x.truncation();
  if (phi.size() != N + 1) throw std::invalid_argument("transport needs one isomorphism per level");
  std::vector<QuiverMorphism> inv;
  for (const auto& p : phi) inv.push_back(quiver::inverse(p));
  TruncatedTemplicial z;
  z.vertices = x.vertices;
  z.instance = x.instance;
  z.data.allocate(N);
  using quiver::compose;
  for (std::size_t k = 0; k <= N; ++k) {
    z.data.levels[k] = phi[k].target();
    for (std::size_t j = 1; j < k; ++j) z.data.d(k, j) = compose(phi[k - 1], compose(x.data.d(k, j), inv[k]));
    if (k < N)
      for (std::size_t i = 0; i <= k; ++i) z.data.s(k, i) = compose(phi[k + 1], compose(x.data.s(k, i), inv[k]));
    for (std::size_t l = 0; k + l <= N; ++l)
      z.data.mu(k, l) = compose(quiver::qtensor(phi[k], phi[l]), compose(x.data.mu(k, l), inv[k + l]));
  }
  z.data.counit = compose(x.data.counit, inv[0]);
  return z;
}

TruncatedTemplicial permute_vertices(const TruncatedTemplicial& x, const std::vector<std::size_t>& p) {
  const std::size_t n = x.vertices.size();
  std::vector<std::string> labels(n);
  std::vector<std::size_t> back(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[p[a]] = x.vertices[a];
    back[p[a]] = a;
  }
  return pull_along_bijection(x, {back, x.vertices}, labels);
}

bool same_data(const TruncatedTemplicial& x, const TruncatedTemplicial& y) {
  const auto& a = x.data;
  const auto& b = y.data;
  return x.vertices.size() == y.vertices.size() && x.instance == y.instance && a.truncation == b.truncation &&
         a.levels == b.levels && a.faces == b.faces && a.degeneracies == b.degeneracies && a.comult == b.comult &&
         a.counit == b.counit;
}

}  // namespace templ
