#include "templ/field.hpp"

#include <cctype>
#include <stdexcept>

namespace templ {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Rational Field::normalize(const Rational& v) const {
  if (p_ == 0) {
    Rational r = v;
    r.canonicalize();
    return r;
  }
  mpz_class p = p_;
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = (a.get_num() + b.get_num()) % p_;
  return Rational(r);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = (a.get_num() - b.get_num()) % p_;
  if (r < 0) r += p_;
  return Rational(r);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % p_;
  return Rational(r);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Rational(mpz_class(p_) - a.get_num());
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class p = p_;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(mpz_class(std::string(num)));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den) || den[0] == '-') throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  mpz_class d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(mpz_class(std::string(num)), d);
  r.canonicalize();
  return r;
}

}  // namespace templ
