#pragma once

// Enriched Segal precategories on a vertex set S: components X(a_0,...,a_n)
// indexed by S-sequences with labeled face and degeneracy actions. Cartesian
// data carries all faces; non-cartesian data carries inner faces plus labeled
// comultiplications and counits in place of the outer faces.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "templ/fint.hpp"
#include "templ/internal.hpp"
#include "templ/nerve.hpp"
#include "templ/templicial.hpp"

namespace templ::precat {

struct PrecatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Sequence = std::vector<std::size_t>;

/// Sequences of length n+1 are indexed lexicographically: sum a_i |S|^(n-i).
std::size_t sequence_index(const Sequence& a, std::size_t vertices);
Sequence sequence_at(std::size_t index, std::size_t length, std::size_t vertices);
std::size_t sequence_count(std::size_t length, std::size_t vertices);

struct PrecatData {
  std::vector<std::string> vertices;
  vcat::Instance instance;
  std::size_t truncation = 0;
  bool cartesian = true;

  std::vector<std::vector<vcat::Object>> components;                // [n][seq]
  std::vector<std::vector<std::vector<vcat::Morphism>>> faces;      // [n][seq][j], j = 0..n (outer unused if non-cartesian)
  std::vector<std::vector<std::vector<vcat::Morphism>>> degeneracies;  // [n][seq][i], n < N
  std::vector<std::vector<std::vector<vcat::Morphism>>> comult;     // [k][l][seq], non-cartesian only
  std::vector<vcat::Morphism> counits;                              // non-cartesian only

  const vcat::Object& at(const Sequence& a) const;
  const vcat::Morphism& face(const Sequence& a, std::size_t j) const;
  const vcat::Morphism& degeneracy(const Sequence& a, std::size_t i) const;
  /// mu_{k,l} on X(a): front and back faces paired (cartesian) or the stored comultiplication.
  vcat::Morphism mu(std::size_t k, std::size_t l, const Sequence& a) const;
  /// X(a_0) -> I: the terminal map (cartesian) or the stored counit.
  vcat::Morphism counit(std::size_t a) const;
  /// Sizes every table for the current vertices, truncation and flavor.
  void allocate();

  friend bool operator==(const PrecatData&, const PrecatData&) = default;
};

/// X(h) : X(a) -> X(a . h) for an interval map h, through its normal form.
std::pair<vcat::Morphism, Sequence> act(const PrecatData& p, const Sequence& a, const fint::IntervalMap& h);

/// Labeled simplicial identities, then the unit condition (cartesian) or the
/// comultiplication laws (non-cartesian), all within the window.
Report check_precat(const PrecatData& p);

struct FiberFamily {
  std::vector<vcat::Object> fibers;
  std::vector<vcat::Morphism> inclusions;  // g^{-1}(a) -> A
  /// The canonical map from the coproduct of the fibers to A.
  vcat::Morphism canonical() const;
};

/// Fibers of g : A -> F(S): preimages over finset, kernels of the other
/// coordinate projections over matmod.
FiberFamily disj_d(const vcat::Morphism& g);
/// Coproduct of the family with its map to F(S) (terminal maps, resp. sums of coordinates).
vcat::Morphism disj_c(const std::vector<vcat::Object>& family, vcat::Instance inst);

/// X_n = coproduct of X(a_0..a_n) over all sequences. Throws PrecatError on a
/// failed unit condition or non-cartesian input.
TruncatedSimplicial simpson_forward(const PrecatData& p);
/// X(a_0..a_n) = fiber of the vertex map X_n -> X_0^{n+1}. Requires base labels
/// with |X_0| = |S|.
PrecatData simpson_backward(const TruncatedSimplicial& x);
/// Vertex i of every n-simplex: d_0 applied i times, then the last face n-i times.
std::vector<Sequence> vertex_sequences(const TruncatedSimplicial& x, std::size_t n);

/// Non-cartesian labeled nerve: X(a_0..a_n) = C(a_0,a_1) (x) ... (x) C(a_{n-1},a_n),
/// identity comultiplications, inner faces by composition, degeneracies by units.
PrecatData nerve_precat(const nerve::EnrichedCategory& c, std::size_t truncation);

/// c'(X)_n(a,b) = coproduct over inner sequences of X(a,a_1,...,a_{n-1},b).
TruncatedTemplicial cprime(const PrecatData& p);

struct PrecatMorphism {
  quiver::VertexMap vertex_map;
  std::vector<std::vector<vcat::Morphism>> components;  // [n][seq] : X(a) -> Y(f a)
};
PrecatMorphism identity_morphism(const PrecatData& p);
PrecatMorphism compose(const PrecatMorphism& g, const PrecatMorphism& f, const PrecatData& source);
/// Componentwise copairing along inner sequences.
TemplicialMorphism cprime_morphism(const PrecatMorphism& m, const PrecatData& p, const PrecatData& q);

/// The based colax functor Leinster-forward of simpson_forward(p), with phi the identity on vertices.
BasedColax leinster_based(const PrecatData& p);

/// Seeded property runs: finset disjointness, coproduct/equalizer commutation
/// and products preserving equalizers.
Report disj_properties_finset(std::uint64_t seed, std::size_t cases);
/// Seeded property runs over Q: split decomposing equalizers and tensor
/// preservation in each variable.
Report decomposing_properties_matmod(std::uint64_t seed, std::size_t cases);

}  // namespace templ::precat
