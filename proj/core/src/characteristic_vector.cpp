#include "wmix/characteristic_vector.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "wmix/errors.hpp"

namespace wmix {

CharacteristicVector::CharacteristicVector(
    std::vector<std::pair<std::uint32_t, std::uint64_t>> entries)
    : entries_(std::move(entries)) {
  for (const auto& [k, c] : entries_) {
    if (k == 0 || c == 0) throw PreconditionError("characteristic vector entries must be >= 1");
  }
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first) {
      throw PreconditionError("duplicate degree in characteristic vector");
    }
  }
}

std::uint64_t CharacteristicVector::at(std::uint32_t degree) const {
  for (const auto& [k, c] : entries_) {
    if (k == degree) return c;
  }
  return 0;
}

std::strong_ordering CharacteristicVector::operator<=>(const CharacteristicVector& rhs) const {
  // Scan from the largest degree down; absent entries count as zero.
  auto a = entries_.rbegin(), ae = entries_.rend();
  auto b = rhs.entries_.rbegin(), be = rhs.entries_.rend();
  while (a != ae || b != be) {
    if (b == be) return std::strong_ordering::greater;
    if (a == ae) return std::strong_ordering::less;
    if (a->first != b->first) {
      // Whichever vector has the larger top degree is larger (the other has
      // count zero there).
      return a->first > b->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a->second != b->second) {
      return a->second > b->second ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

std::string CharacteristicVector::to_string() const {
  std::ostringstream os;
  os << "(";
  std::uint32_t top = entries_.empty() ? 0 : entries_.back().first;
  for (std::uint32_t k = 1; k <= top; ++k) {
    if (k > 1) os << ",";
    os << at(k);
  }
  os << ")";
  return os.str();
}

std::string CharacteristicVector::to_json_string(int indent) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, c] : entries_) j[std::to_string(k)] = c;
  return j.dump(indent);
}

CharacteristicVector characteristic_vector(std::span<const IntPolynomial> ps) {
  // Group leading coefficients by degree, counting distinct values.
  std::vector<std::pair<std::uint32_t, const mpz_class*>> lead;
  lead.reserve(ps.size());
  for (const auto& p : ps) {
    auto d = p.degree();
    if (!d || *d == 0) continue;  // constants are ignored
    lead.emplace_back(static_cast<std::uint32_t>(*d), &p.leading_coefficient());
  }
  std::sort(lead.begin(), lead.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return mpz_cmp(a.second->get_mpz_t(), b.second->get_mpz_t()) < 0;
  });
  CharacteristicVector out;
  for (std::size_t i = 0; i < lead.size();) {
    std::uint32_t k = lead[i].first;
    std::uint64_t distinct = 0;
    std::size_t j = i;
    while (j < lead.size() && lead[j].first == k) {
      if (j == i || *lead[j].second != *lead[j - 1].second) ++distinct;
      ++j;
    }
    out.entries_.emplace_back(k, distinct);
    i = j;
  }
  return out;
}

}  // namespace wmix
