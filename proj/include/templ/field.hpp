#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace templ {

using Rational = mpq_class;

/// Exact scalar field: the rationals, or a prime field F_p.
///
/// Scalars are stored as `Rational` in both cases. Prime-field values are kept
/// as integers in [0, p); every arithmetic helper below returns a normalized
/// value, so equality of normalized scalars is literal equality.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless `p` is prime.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }
  std::string name() const;

  /// Maps a rational into this field (q -> q for Q; num * den^{-1} mod p).
  Rational normalize(const Rational& v) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws std::domain_error on zero.
  Rational inv(const Rational& a) const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Canonical text form: "n" for integers, "p/q" with gcd(p,q) = 1 and q > 0.
std::string to_string(const Rational& v);

/// Parses "n" or "p/q" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace templ
