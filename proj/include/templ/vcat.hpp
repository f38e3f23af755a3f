#pragma once

// The base category V at desk scale. Two exact instances share one interface:
//
//   finset  finite sets; tensor = cartesian product, unit = singleton
//   matmod  finitely generated free modules over Q or F_p; tensor = Kronecker
//
// Both normalize their monoidal structure the same way: an object of size n
// has elements (basis vectors) 0..n-1, A (x) B indexes (a, b) as a*|B| + b and
// a coproduct concatenates its summands. With this convention associators and
// unitors are literal identities, and (A + B) (x) C = A (x) C + B (x) C holds on
// the nose; the left distributor and the symmetry are explicit permutations.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "templ/field.hpp"
#include "templ/matrix.hpp"
#include "templ/report.hpp"

namespace templ::vcat {

enum class Kind : std::uint8_t { finset, matmod };

struct CategoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CompositionError : CategoryError {
  using CategoryError::CategoryError;
};
struct InstanceError : CategoryError {
  using CategoryError::CategoryError;
};
/// Raised when a factorization through a mono does not exist; in the
/// comparison constructions this means the base is not decomposing there.
struct FactorizationError : CategoryError {
  using CategoryError::CategoryError;
};

/// Which concrete base category a value lives in.
struct Instance {
  Kind kind = Kind::finset;
  Field field{};

  static Instance sets() { return {Kind::finset, {}}; }
  static Instance modules(Field f = {}) { return {Kind::matmod, f}; }
  bool cartesian() const { return kind == Kind::finset; }
  bool additive() const { return kind == Kind::matmod; }
  std::string name() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

class Object {
 public:
  Object() = default;

  static Object set(std::size_t n);
  /// Labels must be pairwise distinct.
  static Object set(std::vector<std::string> labels);
  static Object module(std::size_t rank, Field field = {});
  static Object of(Instance inst, std::size_t size);

  Kind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  Field field() const { return field_; }
  Instance instance() const { return {kind_, field_}; }

  bool labeled() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;
  Object unlabeled() const;

  /// Labels are display data and do not take part in equality.
  friend bool operator==(const Object& a, const Object& b) {
    return a.kind_ == b.kind_ && a.size_ == b.size_ && a.field_ == b.field_;
  }

 private:
  Kind kind_ = Kind::finset;
  std::size_t size_ = 0;
  Field field_{};
  std::vector<std::string> labels_;
};

class Morphism {
 public:
  Morphism() = default;

  /// Finite-set map given by its value table.
  static Morphism function(Object source, Object target, std::vector<std::size_t> table);
  /// Linear map; the matrix is target.size() x source.size().
  static Morphism linear(Object source, Object target, Matrix matrix);

  const Object& source() const { return source_; }
  const Object& target() const { return target_; }
  Kind kind() const { return source_.kind(); }
  Instance instance() const { return source_.instance(); }

  const std::vector<std::size_t>& table() const;
  const Matrix& matrix() const;
  std::size_t operator()(std::size_t x) const { return table()[x]; }

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  Object source_;
  Object target_;
  std::vector<std::size_t> table_;
  Matrix matrix_;
};

std::string describe(const Morphism& f);

Object unit(Instance inst);
Object initial(Instance inst);
/// F(S) for |S| = n: the coproduct of n copies of the unit.
Object free_object(Instance inst, std::size_t n);

Morphism identity(const Object& a);
/// g . f; throws CompositionError unless target(f) == source(g).
Morphism compose(const Morphism& g, const Morphism& f);
bool parallel(const Morphism& f, const Morphism& g);

Object tensor(const Object& a, const Object& b);
Object tensor(std::span<const Object> factors, Instance inst);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism tensor(std::span<const Morphism> factors, Instance inst);

struct Coproduct {
  Object object;
  std::vector<Morphism> injections;
  std::vector<std::size_t> offsets;
};

/// Tagged disjoint union / direct sum; the empty family gives the initial object.
Coproduct coproduct(std::span<const Object> family, Instance inst);
Object coproduct_object(std::span<const Object> family, Instance inst);
/// The unique map out of the coproduct of the legs' sources.
Morphism copair(std::span<const Morphism> legs, const Object& target);
/// The coproduct of morphisms, f_1 + ... + f_k.
Morphism direct_sum(std::span<const Morphism> maps, Instance inst);
/// The j-th coprojection A -> A + ... + A (copies summands).
Morphism coprojection(const Object& a, std::size_t copies, std::size_t j);
/// The codiagonal A + ... + A -> A.
Morphism codiagonal(const Object& a, std::size_t copies);
Morphism initial_map(const Object& target);

/// The map sending element/basis vector x to table[x]; the linearization of a
/// function on bases for matmod.
Morphism structural(const Object& source, const Object& target, std::vector<std::size_t> table);
/// The symmetry A (x) B -> B (x) A.
Morphism swap(const Object& a, const Object& b);
/// C (x) (A_1 + ... + A_k) -> C (x) A_1 + ... + C (x) A_k.
Morphism left_distributor(const Object& c, std::span<const Object> family);

struct Equalizer {
  Object object;
  Morphism inclusion;
};

/// finset: {x : f x = g x}; matmod: kernel of f - g by exact elimination.
Equalizer equalizer(const Morphism& f, const Morphism& g);
/// The unique u with m . u = h. Verifies the result before returning it.
Morphism factor_through_mono(const Morphism& m, const Morphism& h);

bool is_mono(const Morphism& f);
bool is_iso(const Morphism& f);
/// Throws CategoryError if f is not invertible.
Morphism inverse(const Morphism& f);

// Cartesian structure (finset only).
Morphism terminal_map(const Object& a);
Morphism pair(const Morphism& f, const Morphism& g);
Morphism project_first(const Object& a, const Object& b);
Morphism project_second(const Object& a, const Object& b);

// Additive structure (matmod; zero_map also exists out of an empty set).
Morphism zero_map(const Object& source, const Object& target);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rational& c);
/// The j-th projection A_1 + ... + A_k -> A_j.
Morphism projection(std::span<const Object> family, std::size_t j);

/// The free-module functor Set -> Mod(k), strong monoidal and coproduct preserving.
Object linearize(const Object& a, Field field);
Morphism linearize(const Morphism& f, Field field);

struct Comonoid {
  Object carrier;
  Morphism comult;
  Morphism counit;
};

/// F(S) with a -> a (x) a and a -> 1.
Comonoid free_comonoid(Instance inst, std::size_t n);
/// Coassociativity and both counit laws, each tallied separately.
Report check_comonoid(const Comonoid& c);
/// (phi (x) phi) . comult = comult . phi and counit . phi = counit.
Report check_comonoid_morphism(const Morphism& phi, const Comonoid& from, const Comonoid& to);

}  // namespace templ::vcat
