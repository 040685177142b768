#ifndef WMIX_INT_POLYNOMIAL_HPP
#define WMIX_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wmix {

/// Exact univariate polynomial over the integers.
///
/// Canonical form: coefficients are stored low degree first and the last
/// stored coefficient is nonzero.  The zero polynomial is the empty
/// coefficient sequence; its degree is the absent optional, never -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  /// Takes coefficients low degree first; trailing zeros are stripped.
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs_low_to_high);

  static IntPolynomial constant(mpz_class c);
  static IntPolynomial monomial(mpz_class c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// True for the zero polynomial and for degree-0 polynomials.
  bool is_constant() const { return coeffs_.size() <= 1; }

  std::optional<std::size_t> degree() const;
  const mpz_class& leading_coefficient() const;  // requires nonzero
  /// Coefficient of x^k; zero beyond the degree.
  const mpz_class& coeff(std::size_t k) const;
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  mpz_class operator()(const mpz_class& x) const;

  /// p(x+h), same degree and leading coefficient.
  IntPolynomial shifted(const mpz_class& h) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) = default;

  /// Storage-reusing assignments for hot loops: *this = a - b and
  /// *this = a(x+h) - b.  Semantically identical to the operators.
  void assign_difference(const IntPolynomial& a, const IntPolynomial& b);
  void assign_shift_difference(const IntPolynomial& a, const mpz_class& h,
                               const IntPolynomial& b);

  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

}  // namespace wmix

#endif
