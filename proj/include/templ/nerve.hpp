#pragma once

// Classical and enriched nerves, the nerve of an enriched functor, and the
// passage between simplicial objects and colax functors over a cartesian base.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "templ/internal.hpp"
#include "templ/templicial.hpp"

namespace templ::nerve {

struct FunctorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// homs[a*n+b] = C(a,b); composition[(a*n+b)*n+c] : C(a,b) (x) C(b,c) -> C(a,c).
struct EnrichedCategory {
  std::vector<std::string> objects;
  vcat::Instance instance;
  std::vector<vcat::Object> homs;
  std::vector<vcat::Morphism> composition;
  std::vector<vcat::Morphism> units;  // I -> C(a,a)

  std::size_t size() const { return objects.size(); }
  const vcat::Object& hom(std::size_t a, std::size_t b) const { return homs.at(a * size() + b); }
  const vcat::Morphism& comp(std::size_t a, std::size_t b, std::size_t c) const {
    return composition.at((a * size() + b) * size() + c);
  }
  const vcat::Morphism& unit(std::size_t a) const { return units.at(a); }
};

/// Finite categories are the finset case.
using FiniteCategory = EnrichedCategory;

/// hom_sizes[a*n+b]; compose(a, b, c, f, g) is the index of g . f for f : a -> b, g : b -> c.
FiniteCategory finite_category(std::vector<std::string> objects, const std::vector<std::size_t>& hom_sizes,
                               const std::function<std::size_t(std::size_t, std::size_t, std::size_t, std::size_t,
                                                               std::size_t)>& compose,
                               const std::vector<std::size_t>& identities);

/// Shapes, associativity and both unit laws.
Report check_category(const EnrichedCategory& c);

struct EnrichedFunctor {
  quiver::VertexMap object_map;
  std::vector<vcat::Morphism> homs;  // C(a,b) -> D(Fa,Fb), indexed a*n+b
};

Report check_functor(const EnrichedFunctor& f, const EnrichedCategory& c, const EnrichedCategory& d);
EnrichedFunctor identity_functor(const EnrichedCategory& c);

// Builders.
EnrichedCategory walking_arrow(vcat::Instance inst);
EnrichedCategory terminal_category(vcat::Instance inst);
EnrichedCategory discrete_category(std::size_t n, vcat::Instance inst);
/// One object whose endomorphisms are the unit algebra.
EnrichedCategory unit_algebra(Field field = {});
/// The poset [k] = {0 < ... < k}.
FiniteCategory ordinal(std::size_t k);
EnrichedCategory linearize(const EnrichedCategory& c, Field field);

/// Object sequences (a, a_1, ..., a_{n-1}, b) in lexicographic order.
std::vector<std::vector<std::size_t>> inner_paths(std::size_t objects, std::size_t n, std::size_t a, std::size_t b);

/// n-simplices are composable paths; all faces and degeneracies. base = object labels.
TruncatedSimplicial nerve_classical(const FiniteCategory& c, std::size_t truncation);
/// X_n(a,b) = coproduct over inner paths of the tensor of homs along the path.
TruncatedTemplicial nerve_enriched(const EnrichedCategory& c, std::size_t truncation);
/// Throws FunctorError if the functor laws fail.
TemplicialMorphism nerve_functor(const EnrichedFunctor& f, const EnrichedCategory& c, const EnrichedCategory& d,
                                 std::size_t truncation);

/// The standard simplex: nerve of [k].
TruncatedSimplicial standard_simplex(std::size_t k, std::size_t truncation);

/// Front face: X_n -> X_k dropping the last n-k vertices; back face drops the first n-k.
vcat::Morphism front_face(const TruncatedSimplicial& x, std::size_t n, std::size_t k);
vcat::Morphism back_face(const TruncatedSimplicial& x, std::size_t n, std::size_t k);

/// Forgets outer faces; mu_{k,l} pairs the front and back faces. Throws InstanceError off finset.
TruncatedColax leinster_forward(const TruncatedSimplicial& x);
/// d_0 = pr_2 . mu_{1,n-1} and d_n = pr_1 . mu_{n-1,1}. Throws InstanceError off finset.
TruncatedSimplicial leinster_backward(const TruncatedColax& x, std::vector<std::string> base = {});

}  // namespace templ::nerve
