#ifndef WMIX_ADMISSIBILITY_HPP
#define WMIX_ADMISSIBILITY_HPP

#include <optional>
#include <span>
#include <string>

#include "wmix/bivariate_polynomial.hpp"
#include "wmix/int_polynomial.hpp"

namespace wmix {

enum class Verdict { holds, fails, undetermined };

std::string to_string(Verdict v);

/// Outcome of an admissibility predicate.  A failing verdict always carries
/// a witness naming the violated clause with the concrete data needed to
/// re-check it.  For the uniform predicate the verdict uses the sign-relaxed
/// member clause (leading x-coefficient constant and nonzero); the literal
/// reading (leading coefficient strictly positive) is reported alongside
/// when the two disagree.
struct AdmissibilityVerdict {
  Verdict verdict = Verdict::holds;
  std::optional<std::string> witness;
  std::optional<Verdict> literal_verdict;
  std::optional<std::string> literal_witness;

  bool holds() const { return verdict == Verdict::holds; }
  std::string to_json_string(int indent = -1) const;
};

/// Admissible sequence: pairwise differences nonconstant, every member of
/// positive degree with positive leading coefficient (the exact test for
/// p(n) -> infinity).
AdmissibilityVerdict is_admissible_sequence(std::span<const IntPolynomial> ps);

/// Uniformly admissible family p_i^(N): member degrees and leading
/// x-coefficients independent of N, ditto for all pairwise differences,
/// with every such leading coefficient a nonzero constant.
AdmissibilityVerdict is_uniformly_admissible(std::span<const BivariatePolynomial> fs);

/// Admissible family (Z[x,N] sense): positive x-degrees, nonconstant
/// pairwise differences, and nonnegativity on the triangle {0 <= x <= N}.
/// Nonnegativity is certified by expanding f(x, x+y) and checking all
/// coefficients are nonnegative, refuted by grid evaluation with
/// N in [1, test_horizon], and otherwise reported as undetermined.
AdmissibilityVerdict is_admissible_family(std::span<const BivariatePolynomial> fs,
                                          long test_horizon);

}  // namespace wmix

#endif
