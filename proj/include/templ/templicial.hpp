#pragma once

// Truncated templicial objects: strongly unital colax functors into V-quivers
// on a vertex set S, and their morphisms (vertex map f plus alpha_n : X_n -> f^* Y_n).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "templ/colax.hpp"
#include "templ/quiver.hpp"
#include "templ/report.hpp"

namespace templ {

struct TruncatedTemplicial {
  std::vector<std::string> vertices;
  vcat::Instance instance;
  Colax<QuiverMonoidal> data;

  QuiverMonoidal monoidal() const { return {vertices, instance}; }
  std::size_t truncation() const { return data.truncation; }
  const quiver::Quiver& level(std::size_t n) const { return data.levels.at(n); }
};

struct TemplicialMorphism {
  quiver::VertexMap vertex_map;
  std::vector<quiver::QuiverMorphism> components;  // alpha_n : X_n -> f^* Y_n

  friend bool operator==(const TemplicialMorphism&, const TemplicialMorphism&) = default;
};

/// Componentwise colax laws plus invertibility of the counit.
Report check_templicial(const TruncatedTemplicial& x);
/// Naturality against generators and compatibility with mu and the counit
/// through the lax structure of f^*.
Report check_templicial_morphism(const TemplicialMorphism& m, const TruncatedTemplicial& x,
                                 const TruncatedTemplicial& y);

TemplicialMorphism identity_morphism(const TruncatedTemplicial& x);
/// (beta . alpha)_n(a,b) = beta_n(f a, f b) . alpha_n(a,b).
TemplicialMorphism compose(const TemplicialMorphism& beta, const TemplicialMorphism& alpha,
                           const TruncatedTemplicial& x);
bool is_iso(const TemplicialMorphism& m);

struct IsoSearchOptions {
  /// Candidate solutions tried per level in the linear search.
  std::size_t candidates_per_level = 4096;
  /// Total backtracking nodes before giving up.
  std::size_t node_budget = 200000;
  /// Over F_p, free parameters up to this count are enumerated exhaustively.
  std::size_t exhaustive_free_limit = 12;
};

struct IsoSearchResult {
  enum class Status { witness, obstruction, inconclusive };
  Status status = Status::inconclusive;
  std::optional<TemplicialMorphism> witness;
  std::string reason;
  std::size_t bijections_tried = 0;
};

std::string to_string(IsoSearchResult::Status s);

/// Searches for an isomorphism X -> Y. Vertex bijections are enumerated and
/// pruned by component sizes; per bijection the levels are solved in order
/// (finset: elementwise backtracking; matmod: exact linear constraints with
/// enumeration of the solution space). A found witness is re-verified with
/// check_templicial_morphism. "obstruction" is only returned when the search
/// was exhaustive.
IsoSearchResult templicial_iso_check(const TruncatedTemplicial& x, const TruncatedTemplicial& y,
                                     const IsoSearchOptions& options = {});

/// Every morphism X -> Y over finset, over every vertex map, in a fixed
/// order. Components are solved elementwise level by level and each result is
/// verified. Throws InstanceError off finset; stops after `limit` results.
std::vector<TemplicialMorphism> enumerate_morphisms(const TruncatedTemplicial& x, const TruncatedTemplicial& y,
                                                    std::size_t limit = 100000);

/// X_n = I_S for every n, all structure maps canonical.
TruncatedTemplicial discrete_templicial(const std::vector<std::string>& vertices, vcat::Instance inst,
                                        std::size_t truncation);
/// Applies the free-module functor componentwise (finset input).
TruncatedTemplicial linearize(const TruncatedTemplicial& x, Field field);
TruncatedTemplicial restrict_window(const TruncatedTemplicial& x, std::size_t n);
/// Transports the structure along componentwise isomorphisms phi_n : X_n -> Z_n.
TruncatedTemplicial transport(const TruncatedTemplicial& x, const std::vector<quiver::QuiverMorphism>& phi);
/// Relabels vertices along a bijection p (new vertex p(a) carries old vertex a).
TruncatedTemplicial permute_vertices(const TruncatedTemplicial& x, const std::vector<std::size_t>& p);
bool same_data(const TruncatedTemplicial& x, const TruncatedTemplicial& y);

}  // namespace templ
