#pragma once

// V-enriched quivers over a finite vertex set S, the monoidal structure
// (Q (x)_S P)(a,b) = coproduct over c of Q(a,c) (x) P(c,b), and change of vertices
// along a map f: S -> T (pushforward f_!, pullback f^*).
//
// Vertices are indices 0..|S|-1 in declared order; middle-vertex coproducts and
// pushforward fibers follow that order (lexicographic for pairs).

#include <cstddef>
#include <string>
#include <vector>

#include "templ/vcat.hpp"

namespace templ::quiver {

using vcat::Instance;
using vcat::Morphism;
using vcat::Object;

class Quiver {
 public:
  Quiver() = default;
  /// All components initial.
  Quiver(std::vector<std::string> vertices, Instance inst);
  /// Components in row-major order of (a, b).
  Quiver(std::vector<std::string> vertices, Instance inst, std::vector<Object> components);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  Instance instance() const { return instance_; }

  const Object& operator()(std::size_t a, std::size_t b) const { return components_[a * vertices_.size() + b]; }
  void set(std::size_t a, std::size_t b, Object o);
  const std::vector<Object>& components() const { return components_; }
  /// Sum of component sizes.
  std::size_t total_size() const;

  /// Vertex labels are display data; equality compares the vertex count and components.
  friend bool operator==(const Quiver& x, const Quiver& y) {
    return x.vertices_.size() == y.vertices_.size() && x.instance_ == y.instance_ && x.components_ == y.components_;
  }

 private:
  std::vector<std::string> vertices_;
  Instance instance_{};
  std::vector<Object> components_;
};

class QuiverMorphism {
 public:
  QuiverMorphism() = default;
  /// Validates componentwise sources and targets.
  QuiverMorphism(Quiver source, Quiver target, std::vector<Morphism> components);

  const Quiver& source() const { return source_; }
  const Quiver& target() const { return target_; }
  const Morphism& operator()(std::size_t a, std::size_t b) const {
    return components_[a * source_.vertex_count() + b];
  }
  const std::vector<Morphism>& components() const { return components_; }

  friend bool operator==(const QuiverMorphism& x, const QuiverMorphism& y) {
    return x.source_ == y.source_ && x.target_ == y.target_ && x.components_ == y.components_;
  }

 private:
  Quiver source_;
  Quiver target_;
  std::vector<Morphism> components_;
};

std::string describe(const Quiver& q);

QuiverMorphism identity(const Quiver& q);
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);
bool is_iso(const QuiverMorphism& f);
QuiverMorphism inverse(const QuiverMorphism& f);

/// The tensor and, for each (a, b, c), the coprojection of the c-summand
/// Q(a,c) (x) P(c,b) into (Q (x) P)(a,b).
struct QuiverTensor {
  Quiver quiver;
  std::vector<Morphism> injections;  // index (a * n + b) * n + c

  const Morphism& injection(std::size_t a, std::size_t b, std::size_t c) const {
    std::size_t n = quiver.vertex_count();
    return injections[(a * n + b) * n + c];
  }
};

QuiverTensor qtensor(const Quiver& q, const Quiver& p);
Quiver qtensor_object(const Quiver& q, const Quiver& p);
QuiverMorphism qtensor(const QuiverMorphism& f, const QuiverMorphism& g);
Quiver qunit(const std::vector<std::string>& vertices, Instance inst);

/// (Q (x) P) (x) R -> Q (x) (P (x) R); a permutation of middle-vertex blocks.
QuiverMorphism associator(const Quiver& q, const Quiver& p, const Quiver& r);
/// I_S (x) Q -> Q and Q (x) I_S -> Q. Literal identities under the size
/// normalization, materialized so checks can state them.
QuiverMorphism left_unitor(const Quiver& q);
QuiverMorphism right_unitor(const Quiver& q);

/// A map of vertex sets S -> T given by images, with the target's labels.
struct VertexMap {
  std::vector<std::size_t> images;
  std::vector<std::string> target;

  std::size_t operator()(std::size_t a) const { return images[a]; }
  std::size_t source_count() const { return images.size(); }
  std::size_t target_count() const { return target.size(); }
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

VertexMap identity_map(const std::vector<std::string>& vertices);
/// t_S: S -> {*}.
VertexMap terminal_vertex_map(std::size_t source_count, std::string point = "*");
VertexMap compose(const VertexMap& g, const VertexMap& f);

/// f_!(Q)(x,y) = coproduct of Q(a,b) over (a,b) with f(a) = x, f(b) = y, lex order.
Quiver pushforward(const VertexMap& f, const Quiver& q);
QuiverMorphism pushforward(const VertexMap& f, const QuiverMorphism& m);
/// Offset of the (a,b) summand inside f_!(Q)(f(a),f(b)).
std::size_t pushforward_offset(const VertexMap& f, const Quiver& q, std::size_t a, std::size_t b);
/// The coprojection Q(a,b) -> f_!(Q)(f(a),f(b)).
Morphism pushforward_coprojection(const VertexMap& f, const Quiver& q, std::size_t a, std::size_t b);
/// The colax comparison f_!(Q (x)_S P) -> f_!Q (x)_T f_!P.
QuiverMorphism pushforward_colax(const VertexMap& f, const Quiver& q, const Quiver& p);
/// The counit comparison f_!(I_S) -> I_T.
QuiverMorphism pushforward_unit(const VertexMap& f, const std::vector<std::string>& source_vertices, Instance inst);

/// f^*(Q)(a,b) = Q(f(a), f(b)).
Quiver pullback(const VertexMap& f, const Quiver& q, const std::vector<std::string>& source_vertices);
QuiverMorphism pullback(const VertexMap& f, const QuiverMorphism& m, const std::vector<std::string>& source_vertices);
/// The lax comparison f^*Q (x)_S f^*P -> f^*(Q (x)_T P).
QuiverMorphism pullback_lax(const VertexMap& f, const Quiver& q, const Quiver& p,
                            const std::vector<std::string>& source_vertices);
/// The lax unit I_S -> f^*(I_T).
QuiverMorphism pullback_unit(const VertexMap& f, const std::vector<std::string>& source_vertices, Instance inst);

/// Q -> f^* f_! Q.
QuiverMorphism adjunction_unit(const VertexMap& f, const Quiver& q);
/// f_! f^* R -> R.
QuiverMorphism adjunction_counit(const VertexMap& f, const Quiver& r, const std::vector<std::string>& source_vertices);

}  // namespace templ::quiver
