#pragma once

// Seeded generators for property runs and the acceptance suite.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "templ/internal.hpp"
#include "templ/nerve.hpp"
#include "templ/templicial.hpp"

namespace templ::gen {

using Rng = std::mt19937_64;

/// Unit lower times unit upper triangular with small entries.
Matrix random_invertible(Rng& rng, std::size_t n, Field field = {});

/// A decomposing f : A -> copies . A. finset: x goes to copy sigma(x);
/// matmod: a random direct-sum splitting A = A_1 + ... + A_copies.
vcat::Morphism random_decomposing(Rng& rng, vcat::Instance inst, const vcat::Object& a, std::size_t copies);

/// One representative per isomorphism class of categories with at most
/// `max_objects` objects and every hom set of size at most `max_hom`.
std::vector<nerve::FiniteCategory> small_categories(std::size_t max_objects = 2, std::size_t max_hom = 2);

/// The standard k-simplex truncated at N, modulo the simplicial congruence
/// generated by `identifications` random pairs of same-level simplices.
TruncatedSimplicial random_quotient(Rng& rng, std::size_t k, std::size_t truncation, std::size_t identifications);

/// Nerves of small categories and quotients of simplices.
TruncatedSimplicial random_simplicial(Rng& rng, std::size_t truncation);

/// Componentwise random basis changes of every level.
std::vector<quiver::QuiverMorphism> random_basis_change(Rng& rng, const TruncatedTemplicial& x);

/// finset: nerves and cprime of random simplicial sets, vertices permuted at
/// random. matmod: the same linearized and transported along random bases.
TruncatedTemplicial random_templicial(Rng& rng, vcat::Instance inst, std::size_t truncation);

}  // namespace templ::gen
