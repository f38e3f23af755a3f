#pragma once

// Truncated colax functors into V, the based variant, and truncated honest
// simplicial objects (cartesian base only).

#include <cstddef>
#include <string>
#include <vector>

#include "templ/colax.hpp"
#include "templ/quiver.hpp"
#include "templ/report.hpp"
#include "templ/vcat.hpp"

namespace templ {

using TruncatedColax = Colax<BaseMonoidal>;

struct BasedColax {
  TruncatedColax underlying;
  std::vector<std::string> base;
  vcat::Morphism base_iso;  // X_0 -> F(S)

  vcat::Instance instance() const { return underlying.levels.at(0).instance(); }
};

/// A based colax morphism: levelwise maps plus the vertex map they cover.
struct BasedColaxMorphism {
  quiver::VertexMap vertex_map;
  std::vector<vcat::Morphism> components;
};

/// All faces and degeneracies, indices 0..n.
struct TruncatedSimplicial {
  std::size_t truncation = 0;
  std::vector<vcat::Object> levels;
  std::vector<std::vector<vcat::Morphism>> faces;         // faces[n][j] : X_n -> X_{n-1}, n >= 1
  std::vector<std::vector<vcat::Morphism>> degeneracies;  // degeneracies[n][i] : X_n -> X_{n+1}, n < N
  /// Optional base: when nonempty, X_0 is identified with these labels.
  std::vector<std::string> base;

  const vcat::Morphism& d(std::size_t n, std::size_t j) const { return faces.at(n).at(j); }
  const vcat::Morphism& s(std::size_t n, std::size_t i) const { return degeneracies.at(n).at(i); }
  vcat::Morphism& d(std::size_t n, std::size_t j) { return faces.at(n).at(j); }
  vcat::Morphism& s(std::size_t n, std::size_t i) { return degeneracies.at(n).at(i); }
  void allocate(std::size_t n);

  friend bool operator==(const TruncatedSimplicial&, const TruncatedSimplicial&) = default;
};

inline BaseMonoidal base_monoidal(const TruncatedColax& x) { return {x.levels.at(0).instance()}; }

Report check_colax(const TruncatedColax& x);
/// check_colax plus: phi invertible and a comonoid map (X_0, mu_{0,0}, eps) -> F(S).
Report check_based(const BasedColax& x);
/// Throws vcat::InstanceError for a non-cartesian instance.
Report check_simplicial(const TruncatedSimplicial& x);
Report check_based_morphism(const BasedColaxMorphism& m, const BasedColax& x, const BasedColax& y);

vcat::Comonoid level_zero_comonoid(const TruncatedColax& x);
/// Every level the unit, every structure map an identity.
TruncatedColax terminal_colax(vcat::Instance inst, std::size_t truncation);
TruncatedSimplicial restrict_window(const TruncatedSimplicial& x, std::size_t n);
bool same_data(const TruncatedColax& x, const TruncatedColax& y);

}  // namespace templ
