#include "templ/quiver.hpp"

#include <sstream>
#include <stdexcept>

namespace templ::quiver {

namespace {

void require_same_vertices(const Quiver& q, const Quiver& p, const char* op) {
  if (q.vertex_count() != p.vertex_count())
    throw std::invalid_argument(std::string(op) + ": vertex sets differ (" + std::to_string(q.vertex_count()) +
                                " vs " + std::to_string(p.vertex_count()) + ")");
  if (!(q.instance() == p.instance())) throw vcat::InstanceError(std::string(op) + ": mixed instances");
}

void require_source(const VertexMap& f, std::size_t count, const char* op) {
  if (f.source_count() != count) throw std::invalid_argument(std::string(op) + ": vertex map has the wrong source");
  for (auto y : f.images)
    if (y >= f.target_count()) throw std::invalid_argument(std::string(op) + ": vertex map image out of range");
}

// A quiver morphism whose components are linearized functions on bases.
QuiverMorphism structural(const Quiver& s, const Quiver& t, const std::vector<std::vector<std::size_t>>& tables) {
  std::vector<Morphism> comps;
  comps.reserve(tables.size());
  for (std::size_t k = 0; k < tables.size(); ++k)
    comps.push_back(vcat::structural(s.components()[k], t.components()[k], tables[k]));
  return {s, t, std::move(comps)};
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, Instance inst)
    : vertices_(std::move(vertices)), instance_(inst) {
  components_.assign(vertices_.size() * vertices_.size(), vcat::initial(inst));
}

Quiver::Quiver(std::vector<std::string> vertices, Instance inst, std::vector<Object> components)
    : vertices_(std::move(vertices)), instance_(inst), components_(std::move(components)) {
  if (components_.size() != vertices_.size() * vertices_.size())
    throw std::invalid_argument("quiver needs one component per ordered vertex pair");
  for (const auto& c : components_)
    if (!(c.instance() == inst)) throw vcat::InstanceError("quiver component in " + c.instance().name());
}

void Quiver::set(std::size_t a, std::size_t b, Object o) {
  if (!(o.instance() == instance_)) throw vcat::InstanceError("quiver component in " + o.instance().name());
  components_[a * vertices_.size() + b] = std::move(o);
}

std::size_t Quiver::total_size() const {
  std::size_t t = 0;
  for (const auto& c : components_) t += c.size();
  return t;
}

QuiverMorphism::QuiverMorphism(Quiver source, Quiver target, std::vector<Morphism> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_vertices(source_, target_, "quiver morphism");
  if (components_.size() != source_.components().size())
    throw std::invalid_argument("quiver morphism needs one component per ordered vertex pair");
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (!(components_[k].source() == source_.components()[k]) || !(components_[k].target() == target_.components()[k]))
      throw vcat::CompositionError("quiver morphism component " + std::to_string(k) + " has the wrong shape");
}

std::string describe(const Quiver& q) {
  std::ostringstream os;
  const std::size_t n = q.vertex_count();
  os << "{";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      os << (a + b ? ", " : "") << q.vertices()[a] << "->" << q.vertices()[b] << ":" << q(a, b).size();
  os << "}";
  return os.str();
}

QuiverMorphism identity(const Quiver& q) {
  std::vector<Morphism> comps;
  for (const auto& c : q.components()) comps.push_back(vcat::identity(c));
  return {q, q, std::move(comps)};
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
  if (!(f.target() == g.source())) throw vcat::CompositionError("quiver morphisms do not compose");
  std::vector<Morphism> comps;
  for (std::size_t k = 0; k < f.components().size(); ++k)
    comps.push_back(vcat::compose(g.components()[k], f.components()[k]));
  return {f.source(), g.target(), std::move(comps)};
}

bool is_iso(const QuiverMorphism& f) {
  for (const auto& c : f.components())
    if (!vcat::is_iso(c)) return false;
  return true;
}

QuiverMorphism inverse(const QuiverMorphism& f) {
  std::vector<Morphism> comps;
  for (const auto& c : f.components()) comps.push_back(vcat::inverse(c));
  return {f.target(), f.source(), std::move(comps)};
}

QuiverTensor qtensor(const Quiver& q, const Quiver& p) {
  require_same_vertices(q, p, "qtensor");
  const std::size_t n = q.vertex_count();
  const Instance inst = q.instance();
  QuiverTensor out;
  std::vector<Object> comps;
  comps.reserve(n * n);
  std::vector<std::vector<Object>> summands(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) summands[a * n + b].push_back(vcat::tensor(q(a, c), p(c, b)));
      comps.push_back(vcat::coproduct_object(summands[a * n + b], inst));
    }
  out.quiver = Quiver(q.vertices(), inst, comps);
  out.injections.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto cp = vcat::coproduct(summands[a * n + b], inst);
      for (auto& inj : cp.injections) out.injections.push_back(std::move(inj));
    }
  return out;
}

Quiver qtensor_object(const Quiver& q, const Quiver& p) {
  require_same_vertices(q, p, "qtensor");
  const std::size_t n = q.vertex_count();
  std::vector<Object> comps;
  comps.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < n; ++c) total += q(a, c).size() * p(c, b).size();
      comps.push_back(Object::of(q.instance(), total));
    }
  return {q.vertices(), q.instance(), std::move(comps)};
}

QuiverMorphism qtensor(const QuiverMorphism& f, const QuiverMorphism& g) {
  require_same_vertices(f.source(), g.source(), "qtensor");
  const std::size_t n = f.source().vertex_count();
  const Instance inst = f.source().instance();
  Quiver s = qtensor_object(f.source(), g.source());
  Quiver t = qtensor_object(f.target(), g.target());
  std::vector<Morphism> comps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Morphism> blocks;
      for (std::size_t c = 0; c < n; ++c) blocks.push_back(vcat::tensor(f(a, c), g(c, b)));
      comps.push_back(vcat::direct_sum(blocks, inst));
    }
  return {std::move(s), std::move(t), std::move(comps)};
}

Quiver qunit(const std::vector<std::string>& vertices, Instance inst) {
  Quiver u(vertices, inst);
  for (std::size_t a = 0; a < vertices.size(); ++a) u.set(a, a, vcat::unit(inst));
  return u;
}

QuiverMorphism associator(const Quiver& q, const Quiver& p, const Quiver& r) {
  const std::size_t n = q.vertex_count();
  Quiver s = qtensor_object(qtensor_object(q, p), r);
  Quiver pr = qtensor_object(p, r);
  Quiver t = qtensor_object(q, pr);
  std::vector<std::vector<std::size_t>> tables(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // Target block offsets: c outer, then d inside P (x) R (c, b).
      std::vector<std::size_t> c_off(n + 1, 0);
      for (std::size_t c = 0; c < n; ++c) c_off[c + 1] = c_off[c] + q(a, c).size() * pr(c, b).size();
      auto& table = tables[a * n + b];
      // Source order: d outer, c inner, then (q, p, r) row-major.
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t d_off = 0;
          for (std::size_t e = 0; e < d; ++e) d_off += p(c, e).size() * r(e, b).size();
          const std::size_t nq = q(a, c).size(), np = p(c, d).size(), nr = r(d, b).size();
          const std::size_t width = pr(c, b).size();
          for (std::size_t x = 0; x < nq; ++x)
            for (std::size_t y = 0; y < np; ++y)
              for (std::size_t z = 0; z < nr; ++z) table.push_back(c_off[c] + x * width + d_off + y * nr + z);
        }
    }
  return structural(s, t, tables);
}

QuiverMorphism left_unitor(const Quiver& q) {
  Quiver s = qtensor_object(qunit(q.vertices(), q.instance()), q);
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& c : q.components()) {
    std::vector<std::size_t> t(c.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = x;
    tables.push_back(std::move(t));
  }
  return structural(s, q, tables);
}

QuiverMorphism right_unitor(const Quiver& q) {
  Quiver s = qtensor_object(q, qunit(q.vertices(), q.instance()));
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& c : q.components()) {
    std::vector<std::size_t> t(c.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = x;
    tables.push_back(std::move(t));
  }
  return structural(s, q, tables);
}

VertexMap identity_map(const std::vector<std::string>& vertices) {
  VertexMap f{std::vector<std::size_t>(vertices.size()), vertices};
  for (std::size_t a = 0; a < vertices.size(); ++a) f.images[a] = a;
  return f;
}

VertexMap terminal_vertex_map(std::size_t source_count, std::string point) {
  return {std::vector<std::size_t>(source_count, 0), {std::move(point)}};
}

VertexMap compose(const VertexMap& g, const VertexMap& f) {
  if (f.target_count() != g.source_count()) throw std::invalid_argument("vertex maps do not compose");
  VertexMap h{std::vector<std::size_t>(f.source_count()), g.target};
  for (std::size_t a = 0; a < f.source_count(); ++a) h.images[a] = g(f(a));
  return h;
}

std::size_t pushforward_offset(const VertexMap& f, const Quiver& q, std::size_t a, std::size_t b) {
  const std::size_t n = q.vertex_count();
  std::size_t off = 0;
  for (std::size_t a2 = 0; a2 < n; ++a2)
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      if (a2 == a && b2 == b) return off;
      if (f(a2) == f(a) && f(b2) == f(b)) off += q(a2, b2).size();
    }
  throw std::out_of_range("pushforward_offset: vertex pair out of range");
}

Quiver pushforward(const VertexMap& f, const Quiver& q) {
  require_source(f, q.vertex_count(), "pushforward");
  const std::size_t n = q.vertex_count(), m = f.target_count();
  std::vector<std::size_t> sizes(m * m, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sizes[f(a) * m + f(b)] += q(a, b).size();
  std::vector<Object> comps;
  for (auto s : sizes) comps.push_back(Object::of(q.instance(), s));
  return {f.target, q.instance(), std::move(comps)};
}

QuiverMorphism pushforward(const VertexMap& f, const QuiverMorphism& g) {
  require_source(f, g.source().vertex_count(), "pushforward");
  const std::size_t n = g.source().vertex_count(), m = f.target_count();
  const Instance inst = g.source().instance();
  std::vector<Morphism> comps;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<Morphism> blocks;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (f(a) == x && f(b) == y) blocks.push_back(g(a, b));
      comps.push_back(vcat::direct_sum(blocks, inst));
    }
  return {pushforward(f, g.source()), pushforward(f, g.target()), std::move(comps)};
}

Morphism pushforward_coprojection(const VertexMap& f, const Quiver& q, std::size_t a, std::size_t b) {
  Quiver fq = pushforward(f, q);
  const std::size_t off = pushforward_offset(f, q, a, b);
  std::vector<std::size_t> table(q(a, b).size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = off + x;
  return vcat::structural(q(a, b), fq(f(a), f(b)), std::move(table));
}

QuiverMorphism pushforward_colax(const VertexMap& f, const Quiver& q, const Quiver& p) {
  require_same_vertices(q, p, "pushforward_colax");
  const std::size_t n = q.vertex_count(), m = f.target_count();
  Quiver qp = qtensor_object(q, p);
  Quiver s = pushforward(f, qp);
  Quiver fq = pushforward(f, q), fp = pushforward(f, p);
  Quiver t = qtensor_object(fq, fp);
  std::vector<std::vector<std::size_t>> tables(m * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x = f(a), y = f(b);
      auto& table = tables[x * m + y];
      // Summands of f_!(Q (x) P)(x,y) arrive in lex (a,b) order, so appending
      // in this loop order builds each table in source order.
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t z = f(c);
        std::size_t z_off = 0;
        for (std::size_t w = 0; w < z; ++w) z_off += fq(x, w).size() * fp(w, y).size();
        const std::size_t qa = pushforward_offset(f, q, a, c), pb = pushforward_offset(f, p, c, b);
        const std::size_t width = fp(z, y).size();
        for (std::size_t u = 0; u < q(a, c).size(); ++u)
          for (std::size_t v = 0; v < p(c, b).size(); ++v) table.push_back(z_off + (qa + u) * width + pb + v);
      }
    }
  return structural(s, t, tables);
}

QuiverMorphism pushforward_unit(const VertexMap& f, const std::vector<std::string>& source_vertices, Instance inst) {
  Quiver s = pushforward(f, qunit(source_vertices, inst));
  Quiver t = qunit(f.target, inst);
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& c : s.components()) tables.emplace_back(c.size(), 0);
  return structural(s, t, tables);
}

Quiver pullback(const VertexMap& f, const Quiver& q, const std::vector<std::string>& source_vertices) {
  require_source(f, source_vertices.size(), "pullback");
  if (f.target_count() != q.vertex_count()) throw std::invalid_argument("pullback: vertex map has the wrong target");
  const std::size_t n = source_vertices.size();
  std::vector<Object> comps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comps.push_back(q(f(a), f(b)));
  return {source_vertices, q.instance(), std::move(comps)};
}

QuiverMorphism pullback(const VertexMap& f, const QuiverMorphism& g, const std::vector<std::string>& source_vertices) {
  const std::size_t n = source_vertices.size();
  std::vector<Morphism> comps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comps.push_back(g(f(a), f(b)));
  return {pullback(f, g.source(), source_vertices), pullback(f, g.target(), source_vertices), std::move(comps)};
}

QuiverMorphism pullback_lax(const VertexMap& f, const Quiver& q, const Quiver& p,
                            const std::vector<std::string>& source_vertices) {
  const std::size_t n = source_vertices.size();
  Quiver s = qtensor_object(pullback(f, q, source_vertices), pullback(f, p, source_vertices));
  Quiver t = pullback(f, qtensor_object(q, p), source_vertices);
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x = f(a), y = f(b);
      std::vector<std::size_t> table;
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t z = f(c);
        std::size_t off = 0;
        for (std::size_t w = 0; w < z; ++w) off += q(x, w).size() * p(w, y).size();
        const std::size_t len = q(x, z).size() * p(z, y).size();
        for (std::size_t u = 0; u < len; ++u) table.push_back(off + u);
      }
      tables.push_back(std::move(table));
    }
  return structural(s, t, tables);
}

QuiverMorphism pullback_unit(const VertexMap& f, const std::vector<std::string>& source_vertices, Instance inst) {
  Quiver s = qunit(source_vertices, inst);
  Quiver t = pullback(f, qunit(f.target, inst), source_vertices);
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& c : s.components()) tables.emplace_back(c.size(), 0);
  return structural(s, t, tables);
}

QuiverMorphism adjunction_unit(const VertexMap& f, const Quiver& q) {
  const std::size_t n = q.vertex_count();
  Quiver t = pullback(f, pushforward(f, q), q.vertices());
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t off = pushforward_offset(f, q, a, b);
      std::vector<std::size_t> table(q(a, b).size());
      for (std::size_t x = 0; x < table.size(); ++x) table[x] = off + x;
      tables.push_back(std::move(table));
    }
  return structural(q, t, tables);
}

QuiverMorphism adjunction_counit(const VertexMap& f, const Quiver& r, const std::vector<std::string>& source_vertices) {
  Quiver s = pushforward(f, pullback(f, r, source_vertices));
  const std::size_t m = r.vertex_count();
  std::vector<std::vector<std::size_t>> tables;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t width = r(x, y).size();
      std::vector<std::size_t> table(s(x, y).size());
      for (std::size_t k = 0; k < table.size(); ++k) table[k] = k % width;
      tables.push_back(std::move(table));
    }
  return structural(s, r, tables);
}

}  // namespace templ::quiver
