#include "templ/vcat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace templ::vcat {

namespace {

void require_same_instance(const Object& a, const Object& b, const char* op) {
  if (a.kind() != b.kind() || !(a.field() == b.field()))
    throw InstanceError(std::string(op) + ": mixed instances " + a.instance().name() + " and " + b.instance().name());
}

void require_kind(const Object& a, Kind k, const char* op) {
  if (a.kind() != k)
    throw InstanceError(std::string(op) + " is only available for " + (k == Kind::finset ? "finset" : "matmod"));
}

std::string shape(const Object& a) { return a.instance().name() + "[" + std::to_string(a.size()) + "]"; }

}  // namespace

std::string Instance::name() const { return kind == Kind::finset ? "finset" : "matmod/" + field.name(); }

Object Object::set(std::size_t n) {
  Object o;
  o.kind_ = Kind::finset;
  o.size_ = n;
  return o;
}

Object Object::set(std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("finite set labels must be distinct");
  Object o = set(labels.size());
  o.labels_ = std::move(labels);
  return o;
}

Object Object::module(std::size_t rank, Field field) {
  Object o;
  o.kind_ = Kind::matmod;
  o.size_ = rank;
  o.field_ = field;
  return o;
}

Object Object::of(Instance inst, std::size_t size) {
  return inst.kind == Kind::finset ? set(size) : module(size, inst.field);
}

std::string Object::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i);
}

Object Object::unlabeled() const {
  Object o = *this;
  o.labels_.clear();
  return o;
}

Morphism Morphism::function(Object source, Object target, std::vector<std::size_t> table) {
  require_kind(source, Kind::finset, "function");
  require_kind(target, Kind::finset, "function");
  if (table.size() != source.size())
    throw std::invalid_argument("function table has " + std::to_string(table.size()) + " entries for a source of size " +
                                std::to_string(source.size()));
  for (auto v : table)
    if (v >= target.size()) throw std::invalid_argument("function value " + std::to_string(v) + " outside target");
  Morphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.table_ = std::move(table);
  return m;
}

Morphism Morphism::linear(Object source, Object target, Matrix matrix) {
  require_kind(source, Kind::matmod, "linear");
  require_same_instance(source, target, "linear");
  if (matrix.rows() != target.size() || matrix.cols() != source.size())
    throw std::invalid_argument("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                ", expected " + std::to_string(target.size()) + "x" + std::to_string(source.size()));
  if (!(matrix.field() == source.field())) throw InstanceError("matrix field differs from object field");
  Morphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.matrix_ = std::move(matrix);
  return m;
}

const std::vector<std::size_t>& Morphism::table() const {
  if (kind() != Kind::finset) throw InstanceError("table() of a linear map");
  return table_;
}

const Matrix& Morphism::matrix() const {
  if (kind() != Kind::matmod) throw InstanceError("matrix() of a function");
  return matrix_;
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  return a.kind() == Kind::finset ? a.table_ == b.table_ : a.matrix_ == b.matrix_;
}

std::string describe(const Morphism& f) {
  std::ostringstream os;
  os << shape(f.source()) << " -> " << shape(f.target()) << " ";
  if (f.kind() == Kind::finset) {
    os << "{";
    for (std::size_t x = 0; x < f.table().size(); ++x) os << (x ? ", " : "") << x << "->" << f.table()[x];
    os << "}";
  } else {
    os << to_string(f.matrix());
  }
  return os.str();
}

Object unit(Instance inst) { return Object::of(inst, 1); }
Object initial(Instance inst) { return Object::of(inst, 0); }
Object free_object(Instance inst, std::size_t n) { return Object::of(inst, n); }

Morphism identity(const Object& a) {
  if (a.kind() == Kind::finset) {
    std::vector<std::size_t> t(a.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return Morphism::function(a, a, std::move(t));
  }
  return Morphism::linear(a, a, Matrix::identity(a.size(), a.field()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source()))
    throw CompositionError("cannot compose " + shape(g.source()) + "->" + shape(g.target()) + " after " +
                           shape(f.source()) + "->" + shape(f.target()));
  if (f.kind() == Kind::finset) {
    std::vector<std::size_t> t(f.source().size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.table()[f.table()[x]];
    return Morphism::function(f.source(), g.target(), std::move(t));
  }
  return Morphism::linear(f.source(), g.target(), g.matrix() * f.matrix());
}

bool parallel(const Morphism& f, const Morphism& g) { return f.source() == g.source() && f.target() == g.target(); }

Object tensor(const Object& a, const Object& b) {
  require_same_instance(a, b, "tensor");
  Object o = Object::of(a.instance(), a.size() * b.size());
  if (a.labeled() && b.labeled()) {
    std::vector<std::string> labels;
    labels.reserve(o.size());
    for (const auto& x : a.labels())
      for (const auto& y : b.labels()) labels.push_back(x + "," + y);
    // Flattened labels can collide for exotic inputs; fall back to unlabeled.
    try {
      return Object::set(std::move(labels));
    } catch (const std::invalid_argument&) {
      return o;
    }
  }
  return o;
}

Object tensor(std::span<const Object> factors, Instance inst) {
  Object acc = unit(inst);
  for (const auto& f : factors) acc = tensor(acc, f);
  return acc;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_same_instance(f.source(), g.source(), "tensor");
  Object s = tensor(f.source(), g.source());
  Object t = tensor(f.target(), g.target());
  if (f.kind() == Kind::finset) {
    std::vector<std::size_t> table(s.size());
    const std::size_t gs = g.source().size(), gt = g.target().size();
    for (std::size_t x = 0; x < f.source().size(); ++x)
      for (std::size_t y = 0; y < gs; ++y) table[x * gs + y] = f.table()[x] * gt + g.table()[y];
    return Morphism::function(std::move(s), std::move(t), std::move(table));
  }
  return Morphism::linear(std::move(s), std::move(t), kronecker(f.matrix(), g.matrix()));
}

Morphism tensor(std::span<const Morphism> factors, Instance inst) {
  Morphism acc = identity(unit(inst));
  for (const auto& f : factors) acc = tensor(acc, f);
  return acc;
}

Coproduct coproduct(std::span<const Object> family, Instance inst) {
  Coproduct c;
  std::size_t total = 0;
  bool labeled = !family.empty();
  for (const auto& a : family) {
    if (a.instance() != inst) throw InstanceError("coproduct: family member in " + a.instance().name());
    c.offsets.push_back(total);
    total += a.size();
    labeled = labeled && (a.labeled() || a.size() == 0);
  }
  if (labeled && inst.kind == Kind::finset) {
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < family.size(); ++j)
      for (const auto& l : family[j].labels()) labels.push_back(std::to_string(j) + ":" + l);
    c.object = Object::set(std::move(labels));
  } else {
    c.object = Object::of(inst, total);
  }
  for (std::size_t j = 0; j < family.size(); ++j) {
    std::vector<std::size_t> table(family[j].size());
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = c.offsets[j] + x;
    c.injections.push_back(structural(family[j], c.object, std::move(table)));
  }
  return c;
}

Object coproduct_object(std::span<const Object> family, Instance inst) {
  std::size_t total = 0;
  for (const auto& a : family) {
    if (a.instance() != inst) throw InstanceError("coproduct: family member in " + a.instance().name());
    total += a.size();
  }
  return Object::of(inst, total);
}

Morphism copair(std::span<const Morphism> legs, const Object& target) {
  const Instance inst = target.instance();
  std::vector<Object> sources;
  for (const auto& h : legs) {
    if (!(h.target() == target)) throw CompositionError("copair: leg target differs from " + shape(target));
    sources.push_back(h.source());
  }
  Object src = coproduct_object(sources, inst);
  if (inst.kind == Kind::finset) {
    std::vector<std::size_t> table;
    table.reserve(src.size());
    for (const auto& h : legs) table.insert(table.end(), h.table().begin(), h.table().end());
    return Morphism::function(src, target, std::move(table));
  }
  std::vector<Matrix> blocks;
  for (const auto& h : legs) blocks.push_back(h.matrix());
  return Morphism::linear(src, target, hstack(blocks, target.size(), inst.field));
}

Morphism direct_sum(std::span<const Morphism> maps, Instance inst) {
  std::vector<Object> sources, targets;
  for (const auto& f : maps) {
    sources.push_back(f.source());
    targets.push_back(f.target());
  }
  Object src = coproduct_object(sources, inst);
  Object tgt = coproduct_object(targets, inst);
  if (inst.kind == Kind::finset) {
    std::vector<std::size_t> table;
    std::size_t off = 0;
    for (const auto& f : maps) {
      for (auto v : f.table()) table.push_back(off + v);
      off += f.target().size();
    }
    return Morphism::function(src, tgt, std::move(table));
  }
  std::vector<Matrix> blocks;
  for (const auto& f : maps) blocks.push_back(f.matrix());
  return Morphism::linear(src, tgt, block_diagonal(blocks, inst.field));
}

Morphism coprojection(const Object& a, std::size_t copies, std::size_t j) {
  if (j >= copies) throw std::out_of_range("coprojection index");
  std::vector<std::size_t> table(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) table[x] = j * a.size() + x;
  return structural(a, Object::of(a.instance(), copies * a.size()), std::move(table));
}

Morphism codiagonal(const Object& a, std::size_t copies) {
  std::vector<std::size_t> table(copies * a.size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = x % (a.size() ? a.size() : 1);
  return structural(Object::of(a.instance(), copies * a.size()), a, std::move(table));
}

Morphism initial_map(const Object& target) { return structural(initial(target.instance()), target, {}); }

Morphism structural(const Object& source, const Object& target, std::vector<std::size_t> table) {
  require_same_instance(source, target, "structural");
  if (source.kind() == Kind::finset) return Morphism::function(source, target, std::move(table));
  if (table.size() != source.size()) throw std::invalid_argument("structural map table size mismatch");
  Matrix m(target.size(), source.size(), source.field());
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] >= target.size()) throw std::invalid_argument("structural map value outside target");
    m.raw(table[x], x) = 1;
  }
  return Morphism::linear(source, target, std::move(m));
}

Morphism swap(const Object& a, const Object& b) {
  std::vector<std::size_t> table(a.size() * b.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) table[x * b.size() + y] = y * a.size() + x;
  return structural(tensor(a, b), tensor(b, a), std::move(table));
}

Morphism left_distributor(const Object& c, std::span<const Object> family) {
  const Instance inst = c.instance();
  Object sum = coproduct_object(family, inst);
  std::size_t total = sum.size();
  // Source index z * total + (offset_j + x) goes to block j at offset_j * |C| + z * |A_j| + x.
  std::vector<std::size_t> table(c.size() * total);
  std::size_t off = 0;
  for (const auto& a : family) {
    for (std::size_t z = 0; z < c.size(); ++z)
      for (std::size_t x = 0; x < a.size(); ++x) table[z * total + off + x] = off * c.size() + z * a.size() + x;
    off += a.size();
  }
  return structural(tensor(c, sum), Object::of(inst, c.size() * total), std::move(table));
}

Equalizer equalizer(const Morphism& f, const Morphism& g) {
  if (!parallel(f, g)) throw CompositionError("equalizer of a non-parallel pair");
  const Object& a = f.source();
  if (a.kind() == Kind::finset) {
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (f.table()[x] == g.table()[x]) keep.push_back(x);
    Object e = Object::set(keep.size());
    if (a.labeled()) {
      std::vector<std::string> labels;
      for (auto x : keep) labels.push_back(a.labels()[x]);
      e = Object::set(std::move(labels));
    }
    return {e, Morphism::function(e, a, std::move(keep))};
  }
  Matrix basis = nullspace(f.matrix() - g.matrix());
  Object e = Object::module(basis.cols(), a.field());
  return {e, Morphism::linear(e, a, std::move(basis))};
}

Morphism factor_through_mono(const Morphism& m, const Morphism& h) {
  if (!(m.target() == h.target())) throw CompositionError("factor_through_mono: targets differ");
  if (!is_mono(m)) throw FactorizationError("factor_through_mono: " + describe(m) + " is not mono");
  Morphism u;
  if (m.kind() == Kind::finset) {
    std::vector<std::size_t> back(m.target().size(), m.source().size());
    for (std::size_t x = 0; x < m.source().size(); ++x) back[m.table()[x]] = x;
    std::vector<std::size_t> table(h.source().size());
    for (std::size_t x = 0; x < table.size(); ++x) {
      std::size_t y = back[h.table()[x]];
      if (y == m.source().size())
        throw FactorizationError("element " + std::to_string(x) + " lands outside the image of the mono");
      table[x] = y;
    }
    u = Morphism::function(h.source(), m.source(), std::move(table));
  } else {
    auto sol = solve(m.matrix(), h.matrix());
    if (!sol) throw FactorizationError("column space of " + describe(h) + " is not inside the image of the mono");
    u = Morphism::linear(h.source(), m.source(), std::move(*sol));
  }
  if (!(compose(m, u) == h)) throw FactorizationError("factorization failed verification");
  return u;
}

bool is_mono(const Morphism& f) {
  if (f.kind() == Kind::finset) {
    std::vector<bool> hit(f.target().size(), false);
    for (auto v : f.table()) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }
  return rank(f.matrix()) == f.source().size();
}

bool is_iso(const Morphism& f) { return f.source().size() == f.target().size() && is_mono(f); }

Morphism inverse(const Morphism& f) {
  if (!is_iso(f)) throw CategoryError("not invertible: " + describe(f));
  if (f.kind() == Kind::finset) {
    std::vector<std::size_t> table(f.target().size());
    for (std::size_t x = 0; x < f.source().size(); ++x) table[f.table()[x]] = x;
    return Morphism::function(f.target(), f.source(), std::move(table));
  }
  return Morphism::linear(f.target(), f.source(), *templ::inverse(f.matrix()));
}

Morphism terminal_map(const Object& a) {
  require_kind(a, Kind::finset, "terminal_map");
  return Morphism::function(a, Object::set(1), std::vector<std::size_t>(a.size(), 0));
}

Morphism pair(const Morphism& f, const Morphism& g) {
  require_kind(f.source(), Kind::finset, "pair");
  if (!(f.source() == g.source())) throw CompositionError("pair: sources differ");
  std::vector<std::size_t> table(f.source().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = f.table()[x] * g.target().size() + g.table()[x];
  return Morphism::function(f.source(), tensor(f.target(), g.target()), std::move(table));
}

Morphism project_first(const Object& a, const Object& b) {
  require_kind(a, Kind::finset, "project_first");
  std::vector<std::size_t> table(a.size() * b.size());
  for (std::size_t z = 0; z < table.size(); ++z) table[z] = z / b.size();
  return Morphism::function(tensor(a, b), a, std::move(table));
}

Morphism project_second(const Object& a, const Object& b) {
  require_kind(a, Kind::finset, "project_second");
  std::vector<std::size_t> table(a.size() * b.size());
  for (std::size_t z = 0; z < table.size(); ++z) table[z] = z % b.size();
  return Morphism::function(tensor(a, b), b, std::move(table));
}

Morphism zero_map(const Object& source, const Object& target) {
  require_same_instance(source, target, "zero_map");
  if (source.kind() == Kind::finset) {
    if (source.size() != 0) throw InstanceError("zero_map out of a nonempty set");
    return Morphism::function(source, target, {});
  }
  return Morphism::linear(source, target, Matrix(target.size(), source.size(), source.field()));
}

Morphism add(const Morphism& f, const Morphism& g) {
  require_kind(f.source(), Kind::matmod, "add");
  if (!parallel(f, g)) throw CompositionError("add: maps are not parallel");
  return Morphism::linear(f.source(), f.target(), f.matrix() + g.matrix());
}

Morphism scale(const Morphism& f, const Rational& c) {
  require_kind(f.source(), Kind::matmod, "scale");
  return Morphism::linear(f.source(), f.target(), f.matrix().scaled(c));
}

Morphism projection(std::span<const Object> family, std::size_t j) {
  if (j >= family.size()) throw std::out_of_range("projection index");
  require_kind(family[j], Kind::matmod, "projection");
  const Instance inst = family[j].instance();
  Object sum = coproduct_object(family, inst);
  std::size_t off = 0;
  for (std::size_t i = 0; i < j; ++i) off += family[i].size();
  Matrix m(family[j].size(), sum.size(), inst.field);
  for (std::size_t x = 0; x < family[j].size(); ++x) m.raw(x, off + x) = 1;
  return Morphism::linear(sum, family[j], std::move(m));
}

Object linearize(const Object& a, Field field) {
  require_kind(a, Kind::finset, "linearize");
  return Object::module(a.size(), field);
}

Morphism linearize(const Morphism& f, Field field) {
  return structural(linearize(f.source(), field), linearize(f.target(), field), f.table());
}

Comonoid free_comonoid(Instance inst, std::size_t n) {
  Object c = free_object(inst, n);
  std::vector<std::size_t> diag(n), collapse(n, 0);
  for (std::size_t x = 0; x < n; ++x) diag[x] = x * n + x;
  return {c, structural(c, tensor(c, c), std::move(diag)), structural(c, unit(inst), std::move(collapse))};
}

Report check_comonoid(const Comonoid& c) {
  Report r;
  const Morphism id = identity(c.carrier);
  if (!(c.comult.source() == c.carrier) || !(c.comult.target() == tensor(c.carrier, c.carrier)) ||
      !(c.counit.source() == c.carrier) || !(c.counit.target() == unit(c.carrier.instance()))) {
    r.fail("comonoid-shape", "", "comultiplication or counit has the wrong source/target");
    return r;
  }
  Morphism left = compose(tensor(c.comult, id), c.comult);
  Morphism right = compose(tensor(id, c.comult), c.comult);
  r.check(left == right, "coassociativity");
  // Unitors are identities under the size-normalized convention.
  r.check(compose(tensor(c.counit, id), c.comult) == id, "left-counit");
  r.check(compose(tensor(id, c.counit), c.comult) == id, "right-counit");
  return r;
}

Report check_comonoid_morphism(const Morphism& phi, const Comonoid& from, const Comonoid& to) {
  Report r;
  if (!(phi.source() == from.carrier) || !(phi.target() == to.carrier)) {
    r.fail("comonoid-morphism-shape", "", "map does not go between the carriers");
    return r;
  }
  r.check(compose(tensor(phi, phi), from.comult) == compose(to.comult, phi), "comonoid-comult");
  r.check(compose(to.counit, phi) == from.counit, "comonoid-counit");
  return r;
}

}  // namespace templ::vcat
