#include "templ/spec_io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <functional>

namespace templ::io {

using quiver::Quiver;
using quiver::QuiverMorphism;
using vcat::Instance;
using vcat::Kind;
using vcat::Morphism;
using vcat::Object;

SpecError::SpecError(std::string p, const std::string& message)
    : std::runtime_error(p.empty() ? message : p + ": " + message), path(std::move(p)) {}

std::string to_string(SpecKind k) {
  switch (k) {
    case SpecKind::enriched_category: return "enriched_category";
    case SpecKind::finite_category: return "finite_category";
    case SpecKind::templicial: return "templicial";
    case SpecKind::based_colax: return "based_colax";
    case SpecKind::simplicial: return "simplicial";
    case SpecKind::precategory: return "precategory";
  }
  return "?";
}

SpecFile make_spec(const nerve::EnrichedCategory& c) {
  return {c.instance.cartesian() ? SpecKind::finite_category : SpecKind::enriched_category, c};
}
SpecFile make_spec(const TruncatedTemplicial& x) { return {SpecKind::templicial, x}; }
SpecFile make_spec(const BasedColax& x) { return {SpecKind::based_colax, x}; }
SpecFile make_spec(const TruncatedSimplicial& x) { return {SpecKind::simplicial, x}; }
SpecFile make_spec(const precat::PrecatData& p) { return {SpecKind::precategory, p}; }

// ---- emission -------------------------------------------------------------------

namespace {

Json header(Instance inst) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["instance"] = inst.cartesian() ? "finset" : "matmod";
  if (!inst.cartesian()) {
    j["field"] = inst.field.is_prime_field() ? "F_p" : "Q";
    if (inst.field.is_prime_field()) j["modulus"] = inst.field.characteristic();
  }
  return j;
}

Json object_json(const Object& o) {
  if (o.labeled()) return o.labels();
  return o.size();
}

template <class T, class F>
Json list(const std::vector<T>& xs, F&& f) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

Json quiver_json(const Quiver& q) { return list(q.components(), object_json); }

Json qmorphism_json(const QuiverMorphism& m) { return list(m.components(), morphism_json); }

template <class M, class LevelJson, class MorJson>
void colax_into(Json& j, const Colax<M>& x, LevelJson&& level, MorJson&& mor) {
  j["truncation"] = x.truncation;
  j["levels"] = list(x.levels, level);
  auto nested = [&](const auto& table) {
    return list(table, [&](const auto& row) { return list(row, mor); });
  };
  j["faces"] = nested(x.faces);
  j["degeneracies"] = nested(x.degeneracies);
  j["comult"] = nested(x.comult);
  j["counit"] = mor(x.counit);
}

Json category_json(const nerve::EnrichedCategory& c) {
  Json j = header(c.instance);
  j["objects"] = c.objects;
  j["homs"] = list(c.homs, object_json);
  j["composition"] = list(c.composition, morphism_json);
  j["units"] = list(c.units, morphism_json);
  return j;
}

Json templicial_json(const TruncatedTemplicial& x) {
  Json j = header(x.instance);
  j["vertices"] = x.vertices;
  colax_into(j, x.data, quiver_json, qmorphism_json);
  return j;
}

Json based_json(const BasedColax& x) {
  Json j = header(x.instance());
  colax_into(j, x.underlying, object_json, morphism_json);
  j["base"] = x.base;
  j["base_iso"] = morphism_json(x.base_iso);
  return j;
}

Json simplicial_json(const TruncatedSimplicial& x) {
  Json j = header(x.levels.at(0).instance());
  j["truncation"] = x.truncation;
  j["levels"] = list(x.levels, object_json);
  auto nested = [](const auto& table) {
    return list(table, [](const auto& row) { return list(row, morphism_json); });
  };
  j["faces"] = nested(x.faces);
  j["degeneracies"] = nested(x.degeneracies);
  j["base"] = x.base;
  return j;
}

Json precat_json(const precat::PrecatData& p) {
  Json j = header(p.instance);
  j["vertices"] = p.vertices;
  j["truncation"] = p.truncation;
  j["cartesian"] = p.cartesian;
  j["components"] = list(p.components, [](const auto& row) { return list(row, object_json); });
  Json faces = Json::array();
  for (std::size_t n = 0; n < p.faces.size(); ++n) {
    Json level = Json::array();
    for (const auto& row : p.faces[n]) {
      Json fs = Json::array();
      for (std::size_t jj = 0; jj < row.size(); ++jj) {
        const bool outer = jj == 0 || jj == n;
        fs.push_back(!p.cartesian && outer ? Json(nullptr) : morphism_json(row[jj]));
      }
      level.push_back(fs);
    }
    faces.push_back(level);
  }
  j["faces"] = faces;
  j["degeneracies"] =
      list(p.degeneracies, [](const auto& lvl) { return list(lvl, [](const auto& r) { return list(r, morphism_json); }); });
  if (!p.cartesian) {
    j["comult"] =
        list(p.comult, [](const auto& k) { return list(k, [](const auto& l) { return list(l, morphism_json); }); });
    j["counits"] = list(p.counits, morphism_json);
  }
  return j;
}

}  // namespace

Json morphism_json(const Morphism& f) {
  Json j;
  j["source"] = object_json(f.source());
  j["target"] = object_json(f.target());
  if (f.kind() == Kind::finset) {
    j["table"] = f.table();
  } else {
    const Matrix& m = f.matrix();
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(templ::to_string(m(r, c)));
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  return j;
}

Json templicial_morphism_json(const TemplicialMorphism& m) {
  Json j;
  j["vertex_map"] = m.vertex_map.images;
  j["components"] = list(m.components, qmorphism_json);
  return j;
}

Json based_morphism_json(const BasedColaxMorphism& m) {
  Json j;
  j["vertex_map"] = m.vertex_map.images;
  j["components"] = list(m.components, morphism_json);
  return j;
}

Json to_json(const SpecFile& spec) {
  Json j = std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, nerve::EnrichedCategory>) return category_json(v);
        else if constexpr (std::is_same_v<T, TruncatedTemplicial>) return templicial_json(v);
        else if constexpr (std::is_same_v<T, BasedColax>) return based_json(v);
        else if constexpr (std::is_same_v<T, TruncatedSimplicial>) return simplicial_json(v);
        else return precat_json(v);
      },
      spec.value);
  j["kind"] = to_string(spec.kind);
  return j;
}

std::string emit(const SpecFile& spec) { return to_json(spec).dump(2) + "\n"; }

// ---- parsing -------------------------------------------------------------------

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(child(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SpecError(path, "expected an array");
  return j;
}

const Json& array(const Json& j, const std::string& path, std::size_t size) {
  array(j, path);
  if (j.size() != size)
    throw SpecError(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::size_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SpecError(path, "expected a natural number");
  return j.get<std::size_t>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SpecError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> labels(const Json& j, const std::string& path) {
  array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], child(path, i)));
  return out;
}

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(path, e.what());
  }
}

Instance parse_instance(const Json& j) {
  const auto version = natural(field(j, "format_version", ""), "/format_version");
  if (version != kFormatVersion) throw SpecError("/format_version", "unsupported version " + std::to_string(version));
  const auto name = text(field(j, "instance", ""), "/instance");
  if (name == "finset") return Instance::sets();
  if (name != "matmod") throw SpecError("/instance", "expected \"finset\" or \"matmod\"");
  const auto f = text(field(j, "field", ""), "/field");
  if (f == "Q") return Instance::modules();
  if (f != "F_p") throw SpecError("/field", "expected \"Q\" or \"F_p\"");
  const auto p = natural(field(j, "modulus", ""), "/modulus");
  return guarded("/modulus", [&] { return Instance::modules(Field::prime(static_cast<std::uint32_t>(p))); });
}

Object parse_object(const Json& j, Instance inst, const std::string& path) {
  if (j.is_array()) {
    if (!inst.cartesian()) throw SpecError(path, "labeled objects are finite sets");
    return guarded(path, [&] { return Object::set(labels(j, path)); });
  }
  return Object::of(inst, natural(j, path));
}

Rational scalar(const Json& j, Field f, const std::string& path) {
  if (j.is_number_integer()) return f.normalize(Rational(j.get<long>()));
  return guarded(path, [&] { return f.normalize(parse_rational(text(j, path))); });
}

Morphism parse_morphism(const Json& j, Instance inst, const std::string& path) {
  const Object src = parse_object(field(j, "source", path), inst, child(path, "source"));
  const Object tgt = parse_object(field(j, "target", path), inst, child(path, "target"));
  if (inst.cartesian()) {
    const std::string tp = child(path, "table");
    const Json& t = array(field(j, "table", path), tp, src.size());
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < t.size(); ++i) table.push_back(natural(t[i], child(tp, i)));
    return guarded(path, [&] { return Morphism::function(src, tgt, std::move(table)); });
  }
  const std::string mp = child(path, "matrix");
  const Json& rows = array(field(j, "matrix", path), mp, tgt.size());
  Matrix m(tgt.size(), src.size(), inst.field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Json& row = array(rows[r], child(mp, r), src.size());
    for (std::size_t c = 0; c < row.size(); ++c) m.set(r, c, scalar(row[c], inst.field, child(child(mp, r), c)));
  }
  return guarded(path, [&] { return Morphism::linear(src, tgt, std::move(m)); });
}

template <class T, class F>
std::vector<T> parse_list(const Json& j, const std::string& path, F&& f) {
  array(j, path);
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(f(j[i], child(path, i)));
  return out;
}

Quiver parse_quiver(const Json& j, const std::vector<std::string>& vertices, Instance inst, const std::string& path) {
  array(j, path, vertices.size() * vertices.size());
  auto comps = parse_list<Object>(j, path, [&](const Json& e, const std::string& p) { return parse_object(e, inst, p); });
  return Quiver(vertices, inst, std::move(comps));
}

QuiverMorphism parse_qmorphism(const Json& j, const std::vector<std::string>& vertices, Instance inst,
                               const std::string& path) {
  array(j, path, vertices.size() * vertices.size());
  auto comps =
      parse_list<Morphism>(j, path, [&](const Json& e, const std::string& p) { return parse_morphism(e, inst, p); });
  std::vector<Object> src, tgt;
  for (const auto& c : comps) {
    src.push_back(c.source());
    tgt.push_back(c.target());
  }
  return guarded(path, [&] {
    return QuiverMorphism(Quiver(vertices, inst, std::move(src)), Quiver(vertices, inst, std::move(tgt)),
                          std::move(comps));
  });
}

template <class M, class LevelParse, class MorParse>
void parse_colax(const Json& j, Colax<M>& x, LevelParse&& level, MorParse&& mor) {
  const std::size_t n = natural(field(j, "truncation", ""), "/truncation");
  x.allocate(n);
  const Json& levels = array(field(j, "levels", ""), "/levels", n + 1);
  for (std::size_t k = 0; k <= n; ++k) x.levels[k] = level(levels[k], child("/levels", k));
  auto nested = [&](std::string_view key, auto& table) {
    const std::string p = child("", key);
    const Json& t = array(field(j, key, ""), p, table.size());
    for (std::size_t k = 0; k < table.size(); ++k) {
      const Json& row = array(t[k], child(p, k), table[k].size());
      for (std::size_t i = 0; i < table[k].size(); ++i) table[k][i] = mor(row[i], child(child(p, k), i));
    }
  };
  nested("faces", x.faces);
  nested("degeneracies", x.degeneracies);
  nested("comult", x.comult);
  x.counit = mor(field(j, "counit", ""), "/counit");
}

nerve::EnrichedCategory parse_category(const Json& j, Instance inst) {
  nerve::EnrichedCategory c;
  c.instance = inst;
  c.objects = labels(field(j, "objects", ""), "/objects");
  const std::size_t s = c.objects.size();
  auto obj = [&](const Json& e, const std::string& p) { return parse_object(e, inst, p); };
  auto mor = [&](const Json& e, const std::string& p) { return parse_morphism(e, inst, p); };
  array(field(j, "homs", ""), "/homs", s * s);
  array(field(j, "composition", ""), "/composition", s * s * s);
  array(field(j, "units", ""), "/units", s);
  c.homs = parse_list<Object>(j["homs"], "/homs", obj);
  c.composition = parse_list<Morphism>(j["composition"], "/composition", mor);
  c.units = parse_list<Morphism>(j["units"], "/units", mor);
  return c;
}

TruncatedTemplicial parse_templicial(const Json& j, Instance inst) {
  TruncatedTemplicial x;
  x.instance = inst;
  x.vertices = labels(field(j, "vertices", ""), "/vertices");
  parse_colax(
      j, x.data, [&](const Json& e, const std::string& p) { return parse_quiver(e, x.vertices, inst, p); },
      [&](const Json& e, const std::string& p) { return parse_qmorphism(e, x.vertices, inst, p); });
  return x;
}

BasedColax parse_based(const Json& j, Instance inst) {
  BasedColax x;
  auto mor = [&](const Json& e, const std::string& p) { return parse_morphism(e, inst, p); };
  parse_colax(j, x.underlying, [&](const Json& e, const std::string& p) { return parse_object(e, inst, p); }, mor);
  x.base = labels(field(j, "base", ""), "/base");
  x.base_iso = mor(field(j, "base_iso", ""), "/base_iso");
  return x;
}

TruncatedSimplicial parse_simplicial(const Json& j, Instance inst) {
  if (!inst.cartesian()) throw SpecError("/instance", "simplicial objects are finset data");
  TruncatedSimplicial x;
  const std::size_t n = natural(field(j, "truncation", ""), "/truncation");
  x.allocate(n);
  const Json& levels = array(field(j, "levels", ""), "/levels", n + 1);
  for (std::size_t k = 0; k <= n; ++k) x.levels[k] = parse_object(levels[k], inst, child("/levels", k));
  auto nested = [&](std::string_view key, auto& table) {
    const std::string p = child("", key);
    const Json& t = array(field(j, key, ""), p, table.size());
    for (std::size_t k = 0; k < table.size(); ++k) {
      const Json& row = array(t[k], child(p, k), table[k].size());
      for (std::size_t i = 0; i < table[k].size(); ++i)
        table[k][i] = parse_morphism(row[i], inst, child(child(p, k), i));
    }
  };
  nested("faces", x.faces);
  nested("degeneracies", x.degeneracies);
  x.base = labels(field(j, "base", ""), "/base");
  return x;
}

precat::PrecatData parse_precat(const Json& j, Instance inst) {
  precat::PrecatData p;
  p.instance = inst;
  p.vertices = labels(field(j, "vertices", ""), "/vertices");
  p.truncation = natural(field(j, "truncation", ""), "/truncation");
  const Json& cart = field(j, "cartesian", "");
  if (!cart.is_boolean()) throw SpecError("/cartesian", "expected a boolean");
  p.cartesian = cart.get<bool>();
  p.allocate();
  const Json& comps = array(field(j, "components", ""), "/components", p.components.size());
  for (std::size_t n = 0; n < p.components.size(); ++n) {
    const std::string pn = child("/components", n);
    const Json& row = array(comps[n], pn, p.components[n].size());
    for (std::size_t q = 0; q < row.size(); ++q) p.components[n][q] = parse_object(row[q], inst, child(pn, q));
  }
  auto cube = [&](std::string_view key, auto& table, bool allow_null) {
    const std::string pk = child("", key);
    const Json& t = array(field(j, key, ""), pk, table.size());
    for (std::size_t a = 0; a < table.size(); ++a) {
      const Json& ta = array(t[a], child(pk, a), table[a].size());
      for (std::size_t b = 0; b < table[a].size(); ++b) {
        const std::string pb = child(child(pk, a), b);
        const Json& tb = array(ta[b], pb, table[a][b].size());
        for (std::size_t c = 0; c < table[a][b].size(); ++c)
          table[a][b][c] = allow_null && tb[c].is_null() ? Morphism{} : parse_morphism(tb[c], inst, child(pb, c));
      }
    }
  };
  cube("faces", p.faces, !p.cartesian);
  cube("degeneracies", p.degeneracies, false);
  if (!p.cartesian) {
    cube("comult", p.comult, false);
    array(field(j, "counits", ""), "/counits", p.counits.size());
    p.counits = parse_list<Morphism>(j["counits"], "/counits",
                                     [&](const Json& e, const std::string& q) { return parse_morphism(e, inst, q); });
  }
  return p;
}

}  // namespace

SpecFile from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("", "expected an object");
  const Instance inst = parse_instance(j);
  const std::string kind = text(field(j, "kind", ""), "/kind");
  if (kind == "enriched_category" || kind == "finite_category") {
    if (kind == "finite_category" && !inst.cartesian()) throw SpecError("/instance", "finite categories are finset");
    return {kind == "finite_category" ? SpecKind::finite_category : SpecKind::enriched_category,
            parse_category(j, inst)};
  }
  if (kind == "templicial") return {SpecKind::templicial, parse_templicial(j, inst)};
  if (kind == "based_colax") return {SpecKind::based_colax, parse_based(j, inst)};
  if (kind == "simplicial") return {SpecKind::simplicial, parse_simplicial(j, inst)};
  if (kind == "precategory") return {SpecKind::precategory, parse_precat(j, inst)};
  throw SpecError("/kind", "unknown kind \"" + kind + "\"");
}

SpecFile parse(std::string_view input) {
  Json j;
  try {
    j = Json::parse(input.begin(), input.end());
  } catch (const Json::parse_error& e) {
    // Locate the byte offset as line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError("", "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return from_json(j);
}

// ---- reports and digests -----------------------------------------------------------

Json report_json(const Report& r) {
  Json laws = Json::array();
  for (const auto& t : r.tallies()) {
    Json entry;
    entry["law"] = t.law;
    entry["checked"] = t.checked;
    entry["failed"] = t.failed;
    entry["passed"] = t.failed == 0;
    Json failures = Json::array();
    for (const auto& f : r.failures())
      if (f.law == t.law) {
        Json fj;
        fj["indices"] = f.where;
        if (!f.detail.empty()) fj["detail"] = f.detail;
        failures.push_back(fj);
      }
    entry["failures"] = failures;
    laws.push_back(entry);
  }
  Json j;
  j["laws"] = laws;
  j["notes"] = r.notes();
  j["passed"] = r.passed();
  return j;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace templ::io
