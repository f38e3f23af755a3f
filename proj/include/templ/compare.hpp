#pragma once

// The collapse functor c (templicial -> based colax), the decomposition d
// (based colax -> templicial) built from decomposing equalizers, and the
// checks that make the equivalence between them executable.

#include <cstddef>
#include <optional>
#include <vector>

#include "templ/internal.hpp"
#include "templ/templicial.hpp"

namespace templ::compare {

struct ShapeError : vcat::CategoryError {
  using vcat::CategoryError::CategoryError;
};

struct DecomposingWitness {
  vcat::Morphism f;
  std::size_t copies = 0;
  bool coassociative = false;  // (coprod f) f = (coprod iota_i) f
  bool retracts = false;       // codiagonal . f = id

  bool decomposing() const { return coassociative && retracts; }
};

/// Component objects X_n(a,b) with their inclusions e_{a,b} : X_n(a,b) -> X_n.
struct ComponentFamily {
  std::vector<std::string> base;
  std::vector<std::vector<vcat::Object>> objects;       // [n][a*|S|+b]
  std::vector<std::vector<vcat::Morphism>> inclusions;  // [n][a*|S|+b]
};

struct SplitWitness {
  vcat::Object equalizer;
  vcat::Morphism inclusion;  // e
  vcat::Morphism section;    // s with e s = p f and s e = id
  bool verified = false;
};

BasedColax collapse_c(const TruncatedTemplicial& x);
/// Copairs alpha_n(a,b) through the coprojections of the target reindexed along f.
BasedColaxMorphism collapse_c_morphism(const TemplicialMorphism& m, const TruncatedTemplicial& x,
                                       const TruncatedTemplicial& y);

/// Throws ShapeError unless f : A -> copies . A.
DecomposingWitness is_decomposing(const vcat::Morphism& f, std::size_t copies);

/// (mu_{0,n} (x) id) . mu_{n,0}, then X_0 (x) X_n (x) X_0 = coproduct over (a,b) of X_n via phi.
vcat::Morphism mu_0n0(const BasedColax& x, std::size_t n);
/// The other bracketing, (id (x) mu_{n,0}) . mu_{0,n}, through the same identification.
vcat::Morphism mu_0n0_alternative(const BasedColax& x, std::size_t n);

/// e_{a,b} = equalizer of mu_{0,n,0} and the (a,b) coprojection, for every level.
ComponentFamily component_family(const BasedColax& x);
/// Restricts all structure along the component family. Throws
/// vcat::FactorizationError if a restriction does not exist.
TruncatedTemplicial decompose_d(const BasedColax& x);
TruncatedTemplicial decompose_d(const BasedColax& x, const ComponentFamily& family);

/// The splitting section s = factor(e, p_j . f). Matmod only.
SplitWitness split_equalizer_witness(const vcat::Morphism& f, std::size_t copies, std::size_t j);
/// A --f--> coprod A ==> coprod coprod A split by the two codiagonals.
Report combined_split_check(const vcat::Morphism& f, std::size_t copies);

/// Coproduct iso, level-zero shape, unique factorization of mu through
/// components, mu_{0,n,0} decomposing with both bracketings equal, and (matmod)
/// verified splittings.
Report check_decomposition(const BasedColax& x);

struct RoundtripResult {
  Report report;
  std::optional<TemplicialMorphism> unit;      // X -> d c X
  IsoSearchResult independent;                 // templicial_iso_check(X, d c X)
  std::optional<BasedColaxMorphism> counit;    // c d Y -> Y for Y = c X
};

RoundtripResult roundtrip_theorem_check(const TruncatedTemplicial& x, const IsoSearchOptions& options = {});

}  // namespace templ::compare
