#pragma once

/// Exact polynomials in q with unbounded integer coefficients.
///
/// A QPoly stores its coefficients densely in ascending degree with no
/// trailing zeros, so the zero polynomial is the empty vector and equality
/// of values is equality of coefficient vectors. The q-integers
/// [i] = 1 + q + ... + q^(i-1) and every Hecke coefficient live here.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heckewalk {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) under GMP arithmetic.
using Rational = mpq_class;

class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<Integer> coeffs);

  static QPoly constant(const Integer& c);
  /// q^d
  static QPoly monomial(std::size_t d, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^d, zero past the end.
  Integer operator[](std::size_t d) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form such as "1 + 2q + q^3".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// [i] = 1 + q + ... + q^(i-1). Throws std::domain_error for i == 0.
QPoly q_int(unsigned i);

QPoly pow(const QPoly& base, unsigned e);

/// Horner evaluation at an exact rational point.
Rational eval(const QPoly& p, const Rational& x);

/// Parses "p/q", "p", or a finite decimal such as "0.25" into a reduced rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);

}  // namespace heckewalk
