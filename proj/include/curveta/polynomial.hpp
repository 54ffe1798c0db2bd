#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace curveta {

/// Exact polynomial in x, y over the rationals. Terms keyed by (deg_x, deg_y);
/// zero coefficients are never stored.
class Poly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, mpq_class>;

  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly monomial(int a, int b, const mpq_class& c = 1);
  static Poly x() { return monomial(1, 0); }
  static Poly y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(int a, int b) const;
  mpq_class constant_term() const { return coeff(0, 0); }

  /// Minimum total degree of a term; -1 for the zero polynomial.
  int order() const;
  int degree() const;
  int degree_x() const;
  int degree_y() const;
  /// Largest k with x^k dividing, resp. y^k.
  int x_valuation() const;
  int y_valuation() const;

  Poly homogeneous_part(int d) const;
  /// Exact division by x^k, resp. y^k; k must not exceed the valuation.
  Poly divide_x_power(int k) const;
  Poly divide_y_power(int k) const;

  /// f(X, Y).
  Poly compose(const Poly& X, const Poly& Y) const;
  Poly pow(unsigned k) const;
  /// Scaled so the term largest in (deg_y, deg_x) has coefficient 1.
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpq_class& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Printed as "c * x^a * y^b + ..." by decreasing (deg_y, deg_x);
  /// unit coefficients and exponents are omitted.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const mpq_class& c);

  Terms terms_;
};

/// Parses integers or rationals, x, y, ^, *, / (by constants), +, -, parentheses;
/// juxtaposed factors multiply.
Poly parse_poly(std::string_view text);

/// Dense univariate polynomial over Q, coefficient i of t^i, no trailing zeros.
using UniPoly = std::vector<mpq_class>;

UniPoly uni_gcd(UniPoly a, UniPoly b);
/// Distinct rational roots, ascending.
std::vector<mpq_class> rational_roots(const UniPoly& f);

}  // namespace curveta
