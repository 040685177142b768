#ifndef WMIX_BIVARIATE_POLYNOMIAL_HPP
#define WMIX_BIVARIATE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "wmix/int_polynomial.hpp"

namespace wmix {

/// Element of Z[x,N]: a finite map from exponent pairs (i, j) to nonzero
/// coefficients, representing sum c_ij x^i N^j.  The second variable is
/// positional; it plays N, h or y depending on context.
class BivariatePolynomial {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (x exponent, N exponent)

  BivariatePolynomial() = default;

  static BivariatePolynomial from_x(const IntPolynomial& p);
  /// Polynomial in the second variable only.
  static BivariatePolynomial from_second(const IntPolynomial& p);
  static BivariatePolynomial constant(mpz_class c);
  static BivariatePolynomial monomial(mpz_class c, std::uint32_t i, std::uint32_t j);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, mpz_class>& terms() const { return terms_; }

  /// Adds c * x^i N^j, erasing the term if it cancels.
  void add_term(std::uint32_t i, std::uint32_t j, const mpz_class& c);

  std::optional<std::uint32_t> deg_x() const;
  std::optional<std::uint32_t> deg_second() const;
  /// Coefficient of x^i as a polynomial in the second variable.
  IntPolynomial x_coefficient(std::uint32_t i) const;
  /// Coefficient of the highest x power (zero polynomial if *this is zero).
  IntPolynomial leading_x_coefficient() const;
  bool depends_on_second() const;

  /// Substitutes the second variable, yielding a polynomial in x.
  IntPolynomial specialize_second(const mpz_class& value) const;
  mpz_class eval(const mpz_class& x, const mpz_class& second) const;

  /// p(x + s) where s is the second variable of the result: lifts a
  /// univariate p to Z[x, s].
  static BivariatePolynomial compose_x_plus_second(const IntPolynomial& p);
  /// Substitutes N = x + y: the result's second variable is y = N - x.
  BivariatePolynomial substitute_second_x_plus_second() const;
  /// Substitutes x = x + c, keeping the second variable.
  BivariatePolynomial shift_x(const mpz_class& c) const;

  BivariatePolynomial operator-() const;
  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator+(BivariatePolynomial lhs, const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator-(BivariatePolynomial lhs, const BivariatePolynomial& rhs);
  friend BivariatePolynomial operator*(const BivariatePolynomial& lhs,
                                       const BivariatePolynomial& rhs);
  friend bool operator==(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) = default;

  std::string to_string(std::string_view x = "x", std::string_view second = "N") const;

 private:
  std::map<Key, mpz_class> terms_;
};

}  // namespace wmix

#endif
