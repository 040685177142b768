#include "wmix/bivariate_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace wmix {

BivariatePolynomial BivariatePolynomial::from_x(const IntPolynomial& p) {
  BivariatePolynomial out;
  auto cs = p.coeffs();
  for (std::uint32_t i = 0; i < cs.size(); ++i) {
    if (cs[i] != 0) out.terms_.emplace(Key{i, 0}, cs[i]);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::from_second(const IntPolynomial& p) {
  BivariatePolynomial out;
  auto cs = p.coeffs();
  for (std::uint32_t j = 0; j < cs.size(); ++j) {
    if (cs[j] != 0) out.terms_.emplace(Key{0, j}, cs[j]);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::constant(mpz_class c) {
  BivariatePolynomial out;
  if (c != 0) out.terms_.emplace(Key{0, 0}, std::move(c));
  return out;
}

BivariatePolynomial BivariatePolynomial::monomial(mpz_class c, std::uint32_t i, std::uint32_t j) {
  BivariatePolynomial out;
  if (c != 0) out.terms_.emplace(Key{i, j}, std::move(c));
  return out;
}

void BivariatePolynomial::add_term(std::uint32_t i, std::uint32_t j, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint32_t> BivariatePolynomial::deg_x() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

std::optional<std::uint32_t> BivariatePolynomial::deg_second() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

IntPolynomial BivariatePolynomial::x_coefficient(std::uint32_t i) const {
  std::vector<mpz_class> cs;
  for (const auto& [key, c] : terms_) {
    if (key.first != i) continue;
    if (cs.size() <= key.second) cs.resize(key.second + 1);
    cs[key.second] = c;
  }
  return IntPolynomial(std::move(cs));
}

IntPolynomial BivariatePolynomial::leading_x_coefficient() const {
  auto d = deg_x();
  if (!d) return IntPolynomial();
  return x_coefficient(*d);
}

bool BivariatePolynomial::depends_on_second() const {
  for (const auto& [key, c] : terms_) {
    if (key.second > 0) return true;
  }
  return false;
}

IntPolynomial BivariatePolynomial::specialize_second(const mpz_class& value) const {
  std::vector<mpz_class> cs;
  for (const auto& [key, c] : terms_) {
    auto [i, j] = key;
    if (cs.size() <= i) cs.resize(i + 1);
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), j);
    cs[i] += c * pw;
  }
  return IntPolynomial(std::move(cs));
}

mpz_class BivariatePolynomial::eval(const mpz_class& x, const mpz_class& second) const {
  mpz_class acc = 0;
  for (const auto& [key, c] : terms_) {
    mpz_class xp, sp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), key.first);
    mpz_pow_ui(sp.get_mpz_t(), second.get_mpz_t(), key.second);
    acc += c * xp * sp;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::compose_x_plus_second(const IntPolynomial& p) {
  // (x + s)^k expanded binomially per coefficient.
  BivariatePolynomial out;
  auto cs = p.coeffs();
  for (std::uint32_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    mpz_class binom = 1;
    for (std::uint32_t a = 0; a <= k; ++a) {
      // binom = C(k, a); term c * C(k,a) x^a s^(k-a)
      out.add_term(a, k - a, cs[k] * binom);
      binom = binom * (k - a) / (a + 1);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::substitute_second_x_plus_second() const {
  BivariatePolynomial out;
  for (const auto& [key, c] : terms_) {
    auto [i, j] = key;
    mpz_class binom = 1;
    for (std::uint32_t a = 0; a <= j; ++a) {
      out.add_term(i + a, j - a, c * binom);
      binom = binom * (j - a) / (a + 1);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::shift_x(const mpz_class& v) const {
  BivariatePolynomial out;
  for (const auto& [key, c] : terms_) {
    auto [i, j] = key;
    mpz_class binom = 1;
    // (x+v)^i = sum_a C(i,a) v^(i-a) x^a.
    std::vector<mpz_class> vpows(i + 1);
    vpows[0] = 1;
    for (std::uint32_t a = 1; a <= i; ++a) vpows[a] = vpows[a - 1] * v;
    for (std::uint32_t a = 0; a <= i; ++a) {
      out.add_term(a, j, c * binom * vpows[i - a]);
      binom = binom * (i - a) / (a + 1);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out(*this);
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BivariatePolynomial operator+(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

BivariatePolynomial operator-(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
  BivariatePolynomial out;
  for (const auto& [k1, c1] : lhs.terms_) {
    for (const auto& [k2, c2] : rhs.terms_) {
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    }
  }
  return out;
}

std::string BivariatePolynomial::to_string(std::string_view x, std::string_view second) const {
  if (terms_.empty()) return "0";
  // Highest x power first, then highest second power.
  std::vector<std::pair<Key, const mpz_class*>> items;
  items.reserve(terms_.size());
  for (const auto& [key, c] : terms_) items.emplace_back(key, &c);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, cp] : items) {
    const mpz_class& c = *cp;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const auto [xi, sj] = key;
    bool printed = false;
    if (a != 1 || (xi == 0 && sj == 0)) {
      os << a.get_str();
      printed = true;
    }
    if (xi > 0) {
      if (printed) os << "*";
      os << x;
      if (xi > 1) os << "^" << xi;
      printed = true;
    }
    if (sj > 0) {
      if (printed) os << "*";
      os << second;
      if (sj > 1) os << "^" << sj;
    }
  }
  return os.str();
}

}  // namespace wmix
