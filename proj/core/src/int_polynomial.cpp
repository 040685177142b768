#include "wmix/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "wmix/errors.hpp"

namespace wmix {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs_low_to_high) {
  coeffs_.reserve(coeffs_low_to_high.size());
  for (long c : coeffs_low_to_high) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(mpz_class c, std::size_t k) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.resize(k);
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const mpz_class& IntPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw PreconditionError("leading_coefficient of the zero polynomial");
  return coeffs_.back();
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

mpz_class IntPolynomial::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

IntPolynomial IntPolynomial::shifted(const mpz_class& h) const {
  IntPolynomial out;
  out.assign_shift_difference(*this, h, IntPolynomial());
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return IntPolynomial();
  IntPolynomial out;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(),
                 rhs.coeffs_[j].get_mpz_t());
    }
  }
  out.normalize();
  return out;
}

void IntPolynomial::assign_difference(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_sub(coeffs_[i].get_mpz_t(), a.coeff(i).get_mpz_t(), b.coeff(i).get_mpz_t());
  }
  normalize();
}

void IntPolynomial::assign_shift_difference(const IntPolynomial& a, const mpz_class& h,
                                            const IntPolynomial& b) {
  if (this == &b) {
    IntPolynomial tmp;
    tmp.assign_shift_difference(a, h, b);
    *this = std::move(tmp);
    return;
  }
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_set(coeffs_[i].get_mpz_t(), a.coeff(i).get_mpz_t());
  }
  if (!a.coeffs_.empty() && h != 0) {
    // In-place Taylor shift: after pass i the low i+1 coefficients hold a(x+h).
    const std::size_t d = a.coeffs_.size() - 1;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = d; j-- > i;) {
        mpz_addmul(coeffs_[j].get_mpz_t(), h.get_mpz_t(), coeffs_[j + 1].get_mpz_t());
      }
    }
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  normalize();
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace wmix
