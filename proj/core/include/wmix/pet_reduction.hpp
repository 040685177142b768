#ifndef WMIX_PET_REDUCTION_HPP
#define WMIX_PET_REDUCTION_HPP

#include <span>
#include <vector>

#include "wmix/bivariate_polynomial.hpp"
#include "wmix/characteristic_vector.hpp"
#include "wmix/int_polynomial.hpp"

namespace wmix {

/// Stable sort by nonincreasing degree (the zero polynomial sorts last).
/// Ties keep the caller's order; after sorting, p_r is the last element.
std::vector<IntPolynomial> sort_family(std::vector<IntPolynomial> ps);
bool family_is_sorted(std::span<const IntPolynomial> ps);

/// Which construction a reduction step uses.
enum class ReductionKind {
  standard,       // the plain reduction
  linear_variant  // the mixed-degree variant folding linear members
};

/// standard when no linear member is present (or the family is entirely
/// linear, where reduction stops anyway), linear_variant for mixed degrees.
ReductionKind select_reduction(std::span<const IntPolynomial> sorted);

/// The plain reduction: [p_i - p_r : i in [r-1]] ++ [p_i(x+h) - p_r : i in [r]],
/// exactly 2r-1 entries.  Requires sorted input.
std::vector<IntPolynomial> pet_reduce(std::span<const IntPolynomial> sorted, const mpz_class& h);
/// Storage-reusing form for hot loops.
void pet_reduce_into(std::span<const IntPolynomial> sorted, const mpz_class& h,
                     std::vector<IntPolynomial>& out);

/// The mixed-degree variant: with the linear members folded into their
/// differences, returns
///   [p_i - p_r : i nonlinear] ++ [p_i(x+h) - p_r : i nonlinear]
///   ++ [p_i - p_r : i linear, i != r].
/// Requires sorted input containing at least one linear and one nonlinear
/// member (rejects entirely linear families).
std::vector<IntPolynomial> pet_reduce_linear_variant(std::span<const IntPolynomial> sorted,
                                                     const mpz_class& h);
void pet_reduce_linear_variant_into(std::span<const IntPolynomial> sorted, const mpz_class& h,
                                    std::vector<IntPolynomial>& out);

/// The exact set of integers h for which the reduced family degenerates:
/// a zero entry, a nonzero constant entry (the r-th self-entry is exempt
/// when p_r is linear), or a constant pairwise difference (the same-member
/// pair is exempt when that member is linear).  Computed symbolically with
/// h as an indeterminate; always finite, always contains 0.
/// Requires is_admissible_sequence(sorted) to hold.
std::vector<mpz_class> exceptional_h_set(std::span<const IntPolynomial> sorted);

/// Same computation for a given construction without the admissibility
/// precondition (internal reduction steps only maintain the difference
/// clause).  Used by reduction trees.
std::vector<mpz_class> exceptional_h_set_for(std::span<const IntPolynomial> sorted,
                                             ReductionKind kind);

/// Concrete counterpart of the symbolic set: reduces at h and checks the
/// output for the degeneracies listed above.
bool reduction_degenerate_at(std::span<const IntPolynomial> sorted, const mpz_class& h,
                             ReductionKind kind);

/// All integer roots of g, exact.  Throws InternalError on the zero
/// polynomial and Error when root isolation would exceed supported bounds.
std::vector<mpz_class> integer_roots(const IntPolynomial& g);

}  // namespace wmix

#endif
