#ifndef WMIX_CHARACTERISTIC_VECTOR_HPP
#define WMIX_CHARACTERISTIC_VECTOR_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wmix/int_polynomial.hpp"

namespace wmix {

/// Degree-indexed count vector: entry at degree k is the number of distinct
/// leading coefficients among the family members of degree exactly k.
/// Constant members contribute nothing.  Stored sparse (no zero counts),
/// ordered by degree; comparison is reverse-lexicographic.
class CharacteristicVector {
 public:
  CharacteristicVector() = default;
  /// Entries as (degree, count) pairs; degrees must be >= 1, counts >= 1.
  explicit CharacteristicVector(std::vector<std::pair<std::uint32_t, std::uint64_t>> entries);

  bool empty() const { return entries_.empty(); }
  std::uint64_t at(std::uint32_t degree) const;
  std::span<const std::pair<std::uint32_t, std::uint64_t>> entries() const { return entries_; }

  /// Reverse-lexicographic order: compare at the largest degree where the
  /// two vectors differ.
  std::strong_ordering operator<=>(const CharacteristicVector& rhs) const;
  bool operator==(const CharacteristicVector& rhs) const = default;

  /// Dense rendering "(c1,c2,...,ck)" up to the largest stored degree.
  std::string to_string() const;
  std::string to_json_string(int indent = -1) const;

 private:
  friend CharacteristicVector characteristic_vector(std::span<const IntPolynomial>);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> entries_;  // sorted by degree
};

CharacteristicVector characteristic_vector(std::span<const IntPolynomial> ps);

inline std::strong_ordering compare_revlex(const CharacteristicVector& a,
                                           const CharacteristicVector& b) {
  return a <=> b;
}

}  // namespace wmix

#endif
