#pragma once

// Finite intervals: monotone maps [m] -> [n] with f(0) = 0 and f(m) = n, under
// composition and the ordinal sum [m] + [n] = [m + n].

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace templ::fint {

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IntervalMap {
 public:
  /// Validates monotonicity and both endpoints.
  IntervalMap(std::size_t target, std::vector<std::size_t> values);

  static IntervalMap identity(std::size_t n);
  /// The inner coface [n-1] -> [n] skipping j, 0 < j < n.
  static IntervalMap coface(std::size_t n, std::size_t j);
  /// The codegeneracy [n+1] -> [n] hitting i twice, 0 <= i <= n.
  static IntervalMap codegeneracy(std::size_t n, std::size_t i);

  std::size_t source() const { return values_.size() - 1; }
  std::size_t target() const { return target_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t k) const { return values_[k]; }
  bool is_identity() const;

  friend bool operator==(const IntervalMap&, const IntervalMap&) = default;
  friend auto operator<=>(const IntervalMap&, const IntervalMap&) = default;

 private:
  std::size_t target_;
  std::vector<std::size_t> values_;
};

std::string to_string(const IntervalMap& f);

/// g . f; throws std::invalid_argument unless target(f) == source(g).
IntervalMap compose(const IntervalMap& g, const IntervalMap& f);
/// Ordinal sum: f's values followed by g's shifted by target(f), junction shared.
IntervalMap sum(const IntervalMap& f, const IntervalMap& g);

/// A generating interval map. `level` is the target dimension, so a face
/// generator is [level-1] -> [level] and a degeneracy is [level+1] -> [level].
/// On a functor X out of the opposite category, a face acts X_level -> X_{level-1}
/// and a degeneracy acts X_level -> X_{level+1}.
struct Generator {
  enum class Kind : unsigned char { face, degeneracy };
  Kind kind;
  std::size_t index;
  std::size_t level;

  std::size_t source_dim() const { return kind == Kind::face ? level - 1 : level + 1; }
  IntervalMap map() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

/// Generators in application order: tokens.front() is applied first, so the
/// represented map is tokens.back() . ... . tokens.front().
struct Word {
  std::size_t source = 0;
  std::vector<Generator> tokens;

  std::size_t target() const { return tokens.empty() ? source : tokens.back().level; }
  friend bool operator==(const Word&, const Word&) = default;
};

std::string to_string(const Word& w);

/// Composes the word; throws std::invalid_argument if dimensions do not chain.
IntervalMap evaluate(const Word& w);
/// Epi-mono normal form: degeneracies with descending index, then faces with
/// ascending index (application order). Unique for each map.
Word factorize(const IntervalMap& f);
bool is_normal_form(const Word& w);

/// Every map [m] -> [n] in increasing lexicographic order of value tables.
/// Throws BoundError when max(m, n) exceeds `bound`.
std::vector<IntervalMap> enumerate_interval_maps(std::size_t m, std::size_t n, std::size_t bound = 8);

/// All generators whose source and target levels are at most `truncation`.
std::vector<Generator> generators(std::size_t truncation);

}  // namespace templ::fint
