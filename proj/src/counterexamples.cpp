#include "templ/counterexamples.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "templ/precat.hpp"

namespace templ::cx {

using quiver::Quiver;
using quiver::QuiverMorphism;
using vcat::Morphism;
using vcat::Object;

// ---- naive nerve of Z[X] --------------------------------------------------

std::size_t PolynomialNerve::index(std::size_t n, const std::vector<std::size_t>& exponents) const {
  const auto& list = monomials.at(n);
  auto it = std::find(list.begin(), list.end(), exponents);
  if (it == list.end()) throw std::out_of_range("monomial outside the degree window");
  return static_cast<std::size_t>(it - list.begin());
}

namespace {

std::vector<std::vector<std::size_t>> monomials_upto(std::size_t vars, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> e(vars, 0);
  while (true) {
    std::size_t total = 0;
    for (auto v : e) total += v;
    if (total <= degree) out.push_back(e);
    std::size_t pos = vars;
    while (pos > 0 && e[pos - 1] == degree) e[--pos] = 0;
    if (pos == 0) break;
    ++e[pos - 1];
  }
  return out;
}

constexpr std::size_t kKilled = SIZE_MAX;

// Ring map on monomials given by the images of the variables (0-based; kKilled = 0).
Matrix ring_map(const PolynomialNerve& x, std::size_t from, std::size_t to, const std::vector<std::size_t>& var) {
  Matrix m(x.basis_size(to), x.basis_size(from));
  for (std::size_t k = 0; k < x.basis_size(from); ++k) {
    const auto& e = x.monomials[from][k];
    std::vector<std::size_t> image(to, 0);
    bool zero = false;
    for (std::size_t i = 0; i < from; ++i) {
      if (e[i] == 0) continue;
      if (var[i] == kKilled) {
        zero = true;
        break;
      }
      image[var[i]] += e[i];
    }
    if (!zero) m.set(x.index(to, image), k, 1);
  }
  return m;
}

std::string monomial_name(const std::vector<std::size_t>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

PolynomialNerve polynomial_nerve(std::size_t truncation, std::size_t degree, bool literal_indices) {
  PolynomialNerve x;
  x.truncation = truncation;
  x.degree = degree;
  for (std::size_t n = 0; n <= truncation; ++n) x.monomials.push_back(monomials_upto(n, degree));
  x.faces.resize(truncation + 1);
  x.degeneracies.resize(truncation + 1);
  for (std::size_t n = 0; n <= truncation; ++n) {
    Matrix aug(1, x.basis_size(n));
    aug.set(0, 0, 1);  // the constant monomial comes first
    x.augmentations.push_back(aug);
    // Variables X_1..X_n are indices 0..n-1.
    if (n >= 1)
      for (std::size_t j = 0; j <= n; ++j) {
        std::vector<std::size_t> var(n);
        for (std::size_t i = 1; i <= n; ++i) {
          if (j == 0)
            var[i - 1] = i == 1 ? kKilled : i - 2;
          else if (j == n)
            var[i - 1] = i == n ? kKilled : i - 1;
          else
            var[i - 1] = i <= j ? i - 1 : i - 2;
        }
        x.faces[n].push_back(ring_map(x, n, n - 1, var));
      }
    if (n < truncation)
      for (std::size_t j = 0; j <= n; ++j) {
        std::vector<std::size_t> var(n);
        for (std::size_t i = 1; i <= n; ++i) {
          const bool fixed = literal_indices ? i < j : i <= j;
          var[i - 1] = fixed ? i - 1 : i;
        }
        x.degeneracies[n].push_back(ring_map(x, n, n + 1, var));
      }
  }
  return x;
}

Report check_polynomial_nerve(const PolynomialNerve& x) {
  Report r;
  const std::size_t N = x.truncation;
  auto at = [](std::size_t n, std::size_t i, std::size_t j) {
    return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  };
  const auto& d = x.faces;
  const auto& s = x.degeneracies;
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        r.check(d[n - 1][i] * d[n][j] == d[n - 1][j - 1] * d[n][i], "face-face", [&] { return at(n, i, j); });
  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        r.check(s[n + 1][i] * s[n][j] == s[n + 1][j + 1] * s[n][i], "degeneracy-degeneracy",
                [&] { return at(n, i, j); });
  for (std::size_t n = 0; n + 1 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const Matrix lhs = d[n + 1][i] * s[n][j];
        Matrix rhs;
        if (i < j)
          rhs = s[n - 1][j - 1] * d[n][i];
        else if (i == j || i == j + 1)
          rhs = Matrix::identity(x.basis_size(n));
        else
          rhs = s[n - 1][j] * d[n][i - 1];
        r.check(lhs == rhs, "face-degeneracy", [&] { return at(n, i, j); });
      }
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      r.check(x.augmentations[n - 1] * d[n][j] == x.augmentations[n], "face-augmentation",
              [&] { return at(n, 0, j); });
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      r.check(x.augmentations[n + 1] * s[n][i] == x.augmentations[n], "degeneracy-augmentation",
              [&] { return at(n, i, 0); });
  return r;
}

Matrix alpha(const PolynomialNerve& x, std::size_t n) {
  Matrix m(x.basis_size(n), x.basis_size(n));
  for (std::size_t k = 0; k < x.basis_size(n); ++k) {
    std::size_t total = 0;
    for (auto e : x.monomials[n][k]) total += e;
    if (total <= 1) m.set(k, k, 1);
  }
  return m;
}

AlphaResult run_alpha_counterexample(std::size_t truncation, std::size_t degree) {
  if (truncation < 1 || truncation > 4 || degree < 2 || degree > 4)
    throw std::invalid_argument("run_alpha_counterexample needs 1 <= N <= 4 and 2 <= D <= 4");
  AlphaResult res;
  const auto x = polynomial_nerve(truncation, degree);
  for (std::size_t n = 0; n <= truncation; ++n) res.basis_sizes.push_back(x.basis_size(n));

  Report structure = check_polynomial_nerve(x);
  res.simplicial = structure.passed();
  res.report.merge(structure, "structure");

  Report commute, aug;
  for (std::size_t n = 1; n <= truncation; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      commute.check(alpha(x, n - 1) * x.faces[n][j] == x.faces[n][j] * alpha(x, n), "alpha-face",
                    [&] { return "n=" + std::to_string(n) + " j=" + std::to_string(j); });
  for (std::size_t n = 0; n < truncation; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      commute.check(alpha(x, n + 1) * x.degeneracies[n][i] == x.degeneracies[n][i] * alpha(x, n),
                    "alpha-degeneracy", [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); });
  for (std::size_t n = 0; n <= truncation; ++n)
    aug.check(x.augmentations[n] * alpha(x, n) == x.augmentations[n], "alpha-augmentation",
              [&] { return "n=" + std::to_string(n); });
  res.commutes = commute.passed();
  res.augmented = aug.passed();
  res.report.merge(commute);
  res.report.merge(aug);

  // Multiplicativity of alpha_1 on Z[X_1], on products staying inside the window.
  const Matrix a1 = alpha(x, 1);
  const auto& mono = x.monomials[1];
  for (std::size_t u = 0; u < mono.size(); ++u)
    for (std::size_t v = 0; v < mono.size(); ++v) {
      const std::size_t du = mono[u][0], dv = mono[v][0];
      if (du + dv > degree) continue;
      const std::size_t uv = x.index(1, {du + dv});
      // alpha(u v) is a multiple of the basis vector uv; so is alpha(u) alpha(v).
      const Rational lhs = a1(uv, uv);
      const Rational rhs = a1(u, u) * a1(v, v);
      const bool ok = res.report.check(lhs == rhs, "alpha-multiplicative", [&] {
        return "alpha_1(" + monomial_name(mono[uv]) + ") = " + (lhs == 0 ? "0" : monomial_name(mono[uv])) +
               " but alpha_1(" + monomial_name(mono[u]) + ") * alpha_1(" + monomial_name(mono[v]) + ") = " +
               (rhs == 0 ? "0" : monomial_name(mono[uv]));
      });
      if (!ok && res.multiplicative) {
        res.multiplicative = false;
        res.witness = res.report.failures().back().where;
      }
    }
  return res;
}

// ---- the object Y ------------------------------------------------------------

namespace {

using Terms = std::vector<std::pair<std::string, Rational>>;
using Basis = std::vector<std::string>;

std::size_t position(const Basis& b, const std::string& name) {
  auto it = std::find(b.begin(), b.end(), name);
  if (it == b.end()) throw std::logic_error("unknown basis element " + name);
  return static_cast<std::size_t>(it - b.begin());
}

Morphism by_names(const Basis& src, const Basis& tgt, const std::function<Terms(const std::string&)>& image) {
  Matrix m(tgt.size(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k)
    for (const auto& [name, c] : image(src[k])) m.set(position(tgt, name), k, m(position(tgt, name), k) + c);
  return Morphism::linear(Object::module(src.size()), Object::module(tgt.size()), std::move(m));
}

// Basis of (P (x) Q)(x,y): middle vertex c, then the row-major tensor basis.
Basis tensor_basis(const std::vector<Basis>& p, const std::vector<Basis>& q, std::size_t s, std::size_t x,
                   std::size_t y) {
  Basis out;
  for (std::size_t c = 0; c < s; ++c)
    for (const auto& u : p[x * s + c])
      for (const auto& v : q[c * s + y]) out.push_back(std::to_string(c) + ":" + u + "|" + v);
  return out;
}

std::string tensor_name(std::size_t c, const std::string& u, const std::string& v) {
  return std::to_string(c) + ":" + u + "|" + v;
}

}  // namespace

TruncatedTemplicial y_object() {
  enum : std::size_t { A = 0, C1 = 1, C2 = 2, B = 3 };
  const std::size_t s = 4;
  const std::vector<std::string> vertices{"a", "c1", "c2", "b"};
  const auto inst = vcat::Instance::modules();

  // Non-degenerate edges by component.
  std::map<std::size_t, std::string> edges{{A * s + C1, "f1"}, {A * s + C2, "f2"}, {C1 * s + B, "g1"},
                                           {C2 * s + B, "g2"}, {A * s + B, "h"}};
  std::vector<std::vector<Basis>> basis(3, std::vector<Basis>(s * s));
  for (std::size_t v = 0; v < s; ++v) {
    basis[0][v * s + v] = {"1"};
    basis[1][v * s + v] = {"id"};
    basis[2][v * s + v] = {"ss id"};
  }
  for (const auto& [xy, e] : edges) {
    basis[1][xy] = {e};
    basis[2][xy] = {"s0 " + e, "s1 " + e};
  }
  basis[2][A * s + B] = {"w", "s0 h", "s1 h"};

  auto quiver_of = [&](const std::vector<Basis>& b) {
    std::vector<Object> comps;
    for (const auto& c : b) comps.push_back(Object::module(c.size()));
    return Quiver(vertices, inst, comps);
  };
  auto edge_name = [&](std::size_t x, std::size_t y) { return x == y ? std::string("id") : edges.at(x * s + y); };

  TruncatedTemplicial y;
  y.vertices = vertices;
  y.instance = inst;
  auto& d = y.data;
  d.allocate(2);
  for (std::size_t n = 0; n <= 2; ++n) d.levels[n] = quiver_of(basis[n]);

  auto levelwise = [&](std::size_t n, const Quiver& target, const std::vector<Basis>& tgt_basis,
                       const std::function<Terms(std::size_t, std::size_t, const std::string&)>& image) {
    std::vector<Morphism> comps;
    for (std::size_t x = 0; x < s; ++x)
      for (std::size_t z = 0; z < s; ++z)
        comps.push_back(by_names(basis[n][x * s + z], tgt_basis[x * s + z],
                                 [&](const std::string& e) { return image(x, z, e); }));
    return QuiverMorphism(d.levels[n], target, std::move(comps));
  };

  d.d(2, 1) = levelwise(2, d.levels[1], basis[1], [&](std::size_t x, std::size_t z, const std::string& e) -> Terms {
    if (e == "w") return {{"h", 1}};
    return {{edge_name(x, z), 1}};
  });
  d.s(0, 0) = levelwise(0, d.levels[1], basis[1], [](std::size_t, std::size_t, const std::string&) -> Terms {
    return {{"id", 1}};
  });
  for (std::size_t i = 0; i <= 1; ++i)
    d.s(1, i) = levelwise(1, d.levels[2], basis[2], [&](std::size_t, std::size_t, const std::string& e) -> Terms {
      if (e == "id") return {{"ss id", 1}};
      return {{"s" + std::to_string(i) + " " + e, 1}};
    });

  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; k + l <= 2; ++l) {
      const Quiver target = quiver::qtensor_object(d.levels[k], d.levels[l]);
      std::vector<Basis> tb(s * s);
      for (std::size_t x = 0; x < s; ++x)
        for (std::size_t z = 0; z < s; ++z) tb[x * s + z] = tensor_basis(basis[k], basis[l], s, x, z);
      const std::string unit_k = k == 0 ? "1" : k == 1 ? "id" : "ss id";
      const std::string unit_l = l == 0 ? "1" : l == 1 ? "id" : "ss id";
      d.mu(k, l) = levelwise(k + l, target, tb, [&](std::size_t x, std::size_t z, const std::string& e) -> Terms {
        if (k == 0) return {{tensor_name(x, "1", e), 1}};
        if (l == 0) return {{tensor_name(z, e, "1"), 1}};
        // k = l = 1 on level 2.
        if (e == "w") return {{tensor_name(C1, "f1", "g1"), 1}, {tensor_name(C2, "f2", "g2"), 1}};
        if (e == "ss id") return {{tensor_name(x, unit_k, unit_l), 1}};
        const std::string edge = e.substr(3);
        if (e[1] == '0') return {{tensor_name(x, "id", edge), 1}};
        return {{tensor_name(z, edge, "id"), 1}};
      });
    }
  const Quiver one = quiver::qunit(vertices, inst);
  std::vector<Basis> ub(s * s);
  for (std::size_t v = 0; v < s; ++v) ub[v * s + v] = {"u"};
  d.counit = levelwise(0, one, ub, [](std::size_t, std::size_t, const std::string&) -> Terms { return {{"u", 1}}; });
  return y;
}

Matrix middle_block_subspace(const TruncatedTemplicial& x, std::size_t a, std::size_t b, std::size_t mid) {
  const std::size_t s = x.vertices.size();
  const auto& m = x.data.mu(1, 1)(a, b).matrix();
  const Field k = x.instance.field;
  // Rows of mu_{1,1}(a,b) outside the mid block must vanish.
  std::vector<std::vector<Rational>> rows;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < s; ++c) {
    const std::size_t size = x.level(1)(a, c).size() * x.level(1)(c, b).size();
    if (c != mid)
      for (std::size_t r = offset; r < offset + size; ++r) {
        rows.emplace_back();
        for (std::size_t col = 0; col < m.cols(); ++col) rows.back().push_back(m(r, col));
      }
    offset += size;
  }
  if (rows.empty()) return Matrix::identity(m.cols(), k);
  return nullspace(Matrix::from_rows(rows, m.cols(), k));
}

namespace {

// Column span of the V_x, and its rank.
Matrix block_sum(const TruncatedTemplicial& x, std::size_t a, std::size_t b) {
  std::vector<Matrix> blocks;
  for (std::size_t c = 0; c < x.vertices.size(); ++c) blocks.push_back(middle_block_subspace(x, a, b, c));
  return hstack(blocks, x.level(2)(a, b).size(), x.instance.field);
}

}  // namespace

Report block_decomposition_report(const TruncatedTemplicial& x) {
  if (x.instance.kind != vcat::Kind::matmod) throw vcat::InstanceError("block decomposition is computed over matmod");
  if (x.truncation() < 2) throw std::invalid_argument("block decomposition needs level 2");
  Report r;
  const std::size_t s = x.vertices.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const std::size_t total = x.level(2)(a, b).size();
      const std::size_t spanned = rank(block_sum(x, a, b));
      r.check(spanned == total, "block-decomposition", [&] {
        return "(" + x.vertices[a] + "," + x.vertices[b] + "): blocks span " + std::to_string(spanned) + " of " +
               std::to_string(total);
      });
    }
  return r;
}

YResult run_Y_counterexample() {
  YResult res;
  const auto y = y_object();
  res.report.merge(check_templicial(y), "templicial");
  const std::size_t a = 0, b = 3;
  for (std::size_t c = 0; c < 4; ++c) res.block_dims.push_back(middle_block_subspace(y, a, b, c).cols());
  const Matrix sum = block_sum(y, a, b);
  res.total_dim = y.level(2)(a, b).size();
  res.sum_dim = rank(sum);
  Matrix w(res.total_dim, 1);
  w.set(0, 0, 1);  // w is the first basis vector of Y_2(a,b)
  const Matrix blocks[] = {sum, w};
  res.w_in_sum = rank(hstack(blocks, res.total_dim, Field{})) == res.sum_dim;
  res.report.check(res.sum_dim < res.total_dim, "proper-sum", [&] {
    return std::to_string(res.sum_dim) + " of " + std::to_string(res.total_dim);
  });
  res.report.check(!res.w_in_sum, "w-excluded");
  res.report.note("dim V_x for x = a, c1, c2, b: " + std::to_string(res.block_dims[0]) + ", " +
                  std::to_string(res.block_dims[1]) + ", " + std::to_string(res.block_dims[2]) + ", " +
                  std::to_string(res.block_dims[3]));
  res.report.note("dim sum V_x = " + std::to_string(res.sum_dim) + " < " + std::to_string(res.total_dim) +
                  " = dim Y_2(a,b); w is not a sum of w_x");
  return res;
}

// ---- coalgebras over F_2 -----------------------------------------------------

namespace {

const Field F2 = Field::prime(2);

vcat::Comonoid as_comonoid(const FiniteCoalgebra& c) {
  const Object a = Object::module(c.dim, F2);
  return {a, Morphism::linear(a, vcat::tensor(a, a), c.comult),
          Morphism::linear(a, Object::module(1, F2), c.counit)};
}

// Vectors of F_2^d as bit patterns; bit i is coordinate i.
std::uint32_t column_bits(const Matrix& m, std::size_t col) {
  std::uint32_t v = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, col) != 0) v |= std::uint32_t{1} << r;
  return v;
}

// Reduces v against an xor basis kept sorted by leading bit.
std::uint32_t reduce(std::uint32_t v, const std::vector<std::uint32_t>& basis) {
  for (auto b : basis) v = std::min(v, v ^ b);
  return v;
}

void insert(std::vector<std::uint32_t>& basis, std::uint32_t v) {
  v = reduce(v, basis);
  if (v == 0) return;
  basis.push_back(v);
  std::sort(basis.begin(), basis.end(), std::greater<>());
}

std::vector<std::uint32_t> basis_of_mask(std::uint32_t mask, std::size_t dim) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t v = 1; v < (std::uint32_t{1} << dim); ++v)
    if ((mask >> v) & 1u) insert(basis, v);
  return basis;
}

std::uint32_t mask_of_basis(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> members{0};
  for (auto b : basis) {
    const std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i) members.push_back(members[i] ^ b);
  }
  std::uint32_t mask = 0;
  for (auto m : members) mask |= std::uint32_t{1} << m;
  return mask;
}

Matrix basis_matrix(const std::vector<std::uint32_t>& basis, std::size_t dim) {
  Matrix m(dim, basis.size(), F2);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      if ((basis[c] >> r) & 1u) m.set(r, c, 1);
  return m;
}

// Canonical basis of a column span: the nonzero rows of the RREF of its transpose.
Matrix canonical_span(const Matrix& cols) {
  if (cols.cols() == 0) return cols;
  const auto e = row_reduce(cols.transpose());
  return e.reduced.rows_range(0, e.pivots.size()).transpose();
}

}  // namespace

Report check_coalgebra(const FiniteCoalgebra& c) { return vcat::check_comonoid(as_comonoid(c)); }

FiniteCoalgebra matrix_coalgebra() {
  FiniteCoalgebra c{4, Matrix(16, 4, F2), Matrix(1, 4, F2)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t e = i * 2 + j;
      for (std::size_t k = 0; k < 2; ++k) c.comult.set((i * 2 + k) * 4 + (k * 2 + j), e, 1);
      if (i == j) c.counit.set(0, e, 1);
    }
  return c;
}

FiniteCoalgebra grouplike_coalgebra(std::size_t dim) {
  FiniteCoalgebra c{dim, Matrix(dim * dim, dim, F2), Matrix(1, dim, F2)};
  for (std::size_t i = 0; i < dim; ++i) {
    c.comult.set(i * dim + i, i, 1);
    c.counit.set(0, i, 1);
  }
  return c;
}

FiniteCoalgebra divided_power_coalgebra(std::size_t dim) {
  FiniteCoalgebra c{dim, Matrix(dim * dim, dim, F2), Matrix(1, dim, F2)};
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t i = 0; i <= n; ++i) c.comult.set(i * dim + (n - i), n, 1);
  if (dim > 0) c.counit.set(0, 0, 1);
  return c;
}

std::vector<std::uint32_t> all_subspaces(std::size_t dim) {
  if (dim > 4) throw std::invalid_argument("all_subspaces: dimension above 4");
  std::vector<std::uint32_t> masks{1u};  // the zero subspace
  // Close under adding one vector at a time.
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::uint32_t v = 1; v < (std::uint32_t{1} << dim); ++v) {
      if ((masks[i] >> v) & 1u) continue;
      auto basis = basis_of_mask(masks[i], dim);
      insert(basis, v);
      const std::uint32_t m = mask_of_basis(basis);
      if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    }
  std::sort(masks.begin(), masks.end());
  return masks;
}

Matrix largest_subcoalgebra_bruteforce(const FiniteCoalgebra& c, const Matrix& w) {
  const std::size_t d = c.dim;
  std::vector<std::uint32_t> wb;
  for (std::size_t col = 0; col < w.cols(); ++col) insert(wb, column_bits(w, col));
  const std::uint32_t wmask = mask_of_basis(wb);
  std::vector<std::uint32_t> delta(d);
  for (std::size_t i = 0; i < d; ++i) delta[i] = column_bits(c.comult, i);
  auto comult_of = [&](std::uint32_t v) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < d; ++i)
      if ((v >> i) & 1u) out ^= delta[i];
    return out;
  };
  auto tensor_bits = [&](std::uint32_t u, std::uint32_t v) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (((u >> i) & 1u) && ((v >> j) & 1u)) out |= std::uint32_t{1} << (i * d + j);
    return out;
  };
  std::vector<std::uint32_t> best;
  for (auto mask : all_subspaces(d)) {
    if ((mask & ~wmask) != 0) continue;
    const auto basis = basis_of_mask(mask, d);
    std::vector<std::uint32_t> square;
    for (auto u : basis)
      for (auto v : basis) insert(square, tensor_bits(u, v));
    bool closed = true;
    for (auto v : basis) closed = closed && reduce(comult_of(v), square) == 0;
    if (closed && basis.size() >= best.size()) best = basis;
  }
  return canonical_span(basis_matrix(best, d));
}

Matrix largest_subcoalgebra_iterative(const FiniteCoalgebra& c, const Matrix& w) {
  Matrix cur = canonical_span(w);
  while (cur.cols() > 0) {
    // Annihilator of C (x) C, then the t with Delta(C t) inside C (x) C.
    const Matrix square = kronecker(cur, cur);
    const Matrix annihilator = nullspace(square.transpose()).transpose();
    if (annihilator.rows() == 0) break;
    const Matrix kept = nullspace(annihilator * c.comult * cur);
    if (kept.cols() == cur.cols()) break;
    cur = canonical_span(cur * kept);
  }
  return cur;
}

CoalgebraResult run_coalgebra_disj_failure() {
  CoalgebraResult res;
  const auto m2 = matrix_coalgebra();
  res.report.merge(check_coalgebra(m2), "comonoid");
  res.subspaces_examined = all_subspaces(4).size();
  res.report.check(res.subspaces_examined == 67, "subspace-count");

  // f : M_2 -> k + k, (a_pq) -> (a_11, a_22).
  Matrix f(2, 4, F2);
  f.set(0, 0, 1);
  f.set(1, 3, 1);
  const auto fibers = precat::disj_d(Morphism::linear(Object::module(4, F2), Object::module(2, F2), f));
  res.algorithms_agree = true;
  for (std::size_t i = 0; i < 2; ++i) {
    const Matrix& pre = fibers.inclusions[i].matrix();
    res.preimage_dims.push_back(pre.cols());
    const Matrix brute = largest_subcoalgebra_bruteforce(m2, pre);
    const Matrix iter = largest_subcoalgebra_iterative(m2, pre);
    res.pullback_dims.push_back(brute.cols());
    res.algorithms_agree = res.algorithms_agree && brute == iter;
    res.report.check(pre.cols() == 3, "preimage-dimension", [&] { return "line " + std::to_string(i + 1); });
    res.report.check(brute.cols() == 0, "pullback-zero", [&] { return "line " + std::to_string(i + 1); });
  }
  res.report.check(res.algorithms_agree, "algorithms-agree");
  res.report.check(res.pullback_dims[0] + res.pullback_dims[1] != m2.dim, "coproduct-not-recovered");
  res.report.note("linear preimages have dimensions " + std::to_string(res.preimage_dims[0]) + " and " +
                  std::to_string(res.preimage_dims[1]) + "; their largest subcoalgebras are zero");
  return res;
}

// ---- parity ----------------------------------------------------------------------

Report dimension_parity_note(const TruncatedTemplicial& x, const std::vector<std::size_t>& involution) {
  const std::size_t s = x.vertices.size();
  if (involution.size() != s) throw std::invalid_argument("parity: involution has the wrong size");
  for (std::size_t v = 0; v < s; ++v)
    if (involution[v] >= s || involution[involution[v]] != v)
      throw std::invalid_argument("parity: the vertex map is not an involution");
  if (x.instance.kind != vcat::Kind::matmod) throw vcat::InstanceError("parity needs matmod");
  if (x.truncation() < 2) throw std::invalid_argument("parity needs level 2");
  Report r;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      if (involution[a] != a || involution[b] != b) continue;
      bool paired = true;
      for (std::size_t c = 0; c < s; ++c)
        if (c != a && c != b && involution[c] == c) paired = false;
      if (!paired) continue;
      const std::size_t total = x.level(2)(a, b).size();
      const Matrix degenerate[] = {x.data.s(1, 0)(a, b).matrix(), x.data.s(1, 1)(a, b).matrix()};
      const std::size_t nondeg = total - rank(hstack(degenerate, total, x.instance.field));
      r.check(nondeg % 2 == 0, "parity", [&] {
        return "(" + x.vertices[a] + "," + x.vertices[b] + "): non-degenerate dimension " + std::to_string(nondeg) +
               " cannot split into swapped blocks";
      });
    }
  return r;
}

}  // namespace templ::cx
