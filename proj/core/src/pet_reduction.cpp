#include "wmix/pet_reduction.hpp"

#include <algorithm>
#include <set>

#include "wmix/admissibility.hpp"
#include "wmix/errors.hpp"

namespace wmix {

namespace {

long degree_or_minus_one(const IntPolynomial& p) {
  auto d = p.degree();
  return d ? static_cast<long>(*d) : -1;
}

std::size_t count_linear(std::span<const IntPolynomial> ps) {
  std::size_t s = 0;
  for (const auto& p : ps) {
    if (degree_or_minus_one(p) == 1) ++s;
  }
  return s;
}

std::size_t count_nonlinear(std::span<const IntPolynomial> ps) {
  std::size_t s = 0;
  for (const auto& p : ps) {
    if (degree_or_minus_one(p) >= 2) ++s;
  }
  return s;
}

void require_sorted(std::span<const IntPolynomial> ps, const char* who) {
  if (ps.empty()) throw PreconditionError(std::string(who) + ": empty family");
  if (!family_is_sorted(ps)) {
    throw PreconditionError(std::string(who) + ": input must be sorted by nonincreasing degree");
  }
}

}  // namespace

std::vector<IntPolynomial> sort_family(std::vector<IntPolynomial> ps) {
  std::stable_sort(ps.begin(), ps.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
    return degree_or_minus_one(a) > degree_or_minus_one(b);
  });
  return ps;
}

bool family_is_sorted(std::span<const IntPolynomial> ps) {
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (degree_or_minus_one(ps[i - 1]) < degree_or_minus_one(ps[i])) return false;
  }
  return true;
}

ReductionKind select_reduction(std::span<const IntPolynomial> sorted) {
  if (count_linear(sorted) >= 1 && count_nonlinear(sorted) >= 1) {
    return ReductionKind::linear_variant;
  }
  return ReductionKind::standard;
}

void pet_reduce_into(std::span<const IntPolynomial> sorted, const mpz_class& h,
                     std::vector<IntPolynomial>& out) {
  require_sorted(sorted, "pet_reduce");
  const std::size_t r = sorted.size();
  out.resize(2 * r - 1);
  const IntPolynomial& last = sorted[r - 1];
  for (std::size_t i = 0; i + 1 < r; ++i) out[i].assign_difference(sorted[i], last);
  for (std::size_t i = 0; i < r; ++i) {
    out[r - 1 + i].assign_shift_difference(sorted[i], h, last);
  }
}

std::vector<IntPolynomial> pet_reduce(std::span<const IntPolynomial> sorted, const mpz_class& h) {
  std::vector<IntPolynomial> out;
  pet_reduce_into(sorted, h, out);
  return out;
}

void pet_reduce_linear_variant_into(std::span<const IntPolynomial> sorted, const mpz_class& h,
                                    std::vector<IntPolynomial>& out) {
  require_sorted(sorted, "pet_reduce_linear_variant");
  const std::size_t r = sorted.size();
  const std::size_t nonlinear = count_nonlinear(sorted);
  const std::size_t linear = count_linear(sorted);
  if (linear == 0 || nonlinear == 0) {
    throw PreconditionError(
        "pet_reduce_linear_variant: family must contain both a linear and a nonlinear member");
  }
  if (nonlinear + linear != r) {
    throw PreconditionError("pet_reduce_linear_variant: family contains a constant member");
  }
  // Sorted input puts the nonlinear members first and p_r is linear.
  const IntPolynomial& last = sorted[r - 1];
  out.resize(2 * nonlinear + linear - 1);
  for (std::size_t i = 0; i < nonlinear; ++i) out[i].assign_difference(sorted[i], last);
  for (std::size_t i = 0; i < nonlinear; ++i) {
    out[nonlinear + i].assign_shift_difference(sorted[i], h, last);
  }
  for (std::size_t i = nonlinear; i + 1 < r; ++i) {
    out[nonlinear + i].assign_difference(sorted[i], last);
  }
}

std::vector<IntPolynomial> pet_reduce_linear_variant(std::span<const IntPolynomial> sorted,
                                                     const mpz_class& h) {
  std::vector<IntPolynomial> out;
  pet_reduce_linear_variant_into(sorted, h, out);
  return out;
}

std::vector<mpz_class> integer_roots(const IntPolynomial& g) {
  if (g.is_zero()) throw InternalError("integer_roots: zero polynomial has every root");
  std::vector<mpz_class> roots;
  // Strip x^v; 0 is a root iff v >= 1.
  auto cs = g.coeffs();
  std::size_t v = 0;
  while (v < cs.size() && cs[v] == 0) ++v;
  if (v > 0) roots.emplace_back(0);
  const std::size_t d = cs.size() - 1 - v;
  if (d == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  std::vector<mpz_class> c(cs.begin() + v, cs.end());
  IntPolynomial core{std::vector<mpz_class>(c)};
  // Any integer root divides c[0] and obeys the Cauchy-style bound
  // |root| <= 1 + max |c_i| / |c_d|.
  mpz_class maxc = 0;
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class a = abs(c[i]);
    if (a > maxc) maxc = a;
  }
  mpz_class bound;
  const mpz_class lead = abs(c[d]);
  mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  bound += 1;
  const mpz_class c0 = abs(c[0]);
  auto try_root = [&](const mpz_class& x) {
    if (core(x) == 0) roots.push_back(x);
  };
  if (bound <= 100000) {
    for (mpz_class x = -bound; x <= bound; ++x) {
      if (x == 0) continue;
      if (mpz_divisible_p(c0.get_mpz_t(), x.get_mpz_t())) try_root(x);
    }
  } else if (c0 <= mpz_class("100000000000000")) {
    // Divisor enumeration by trial division.
    mpz_class lim;
    mpz_sqrt(lim.get_mpz_t(), c0.get_mpz_t());
    for (mpz_class q = 1; q <= lim; ++q) {
      if (!mpz_divisible_p(c0.get_mpz_t(), q.get_mpz_t())) continue;
      mpz_class p = c0 / q;
      for (const mpz_class* cand : {&q, &p}) {
        if (*cand > bound) continue;
        try_root(*cand);
        try_root(mpz_class(-*cand));
        if (p == q) break;
      }
    }
  } else {
    throw Error("integer_roots: constant term too large for exact root isolation");
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

struct SymbolicEntry {
  BivariatePolynomial poly;  // in (x, h)
  int sigma;                 // 0: unshifted list, 1: shifted list
  std::size_t member;        // 1-based index into the sorted family
};

std::vector<SymbolicEntry> symbolic_entries(std::span<const IntPolynomial> sorted,
                                            ReductionKind kind) {
  const std::size_t r = sorted.size();
  const IntPolynomial& last = sorted[r - 1];
  std::vector<SymbolicEntry> entries;
  if (kind == ReductionKind::standard) {
    entries.reserve(2 * r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) {
      entries.push_back({BivariatePolynomial::from_x(sorted[i] - last), 0, i + 1});
    }
    for (std::size_t i = 0; i < r; ++i) {
      entries.push_back({BivariatePolynomial::compose_x_plus_second(sorted[i]) -
                             BivariatePolynomial::from_x(last),
                         1, i + 1});
    }
  } else {
    const std::size_t nonlinear = count_nonlinear(sorted);
    for (std::size_t i = 0; i < nonlinear; ++i) {
      entries.push_back({BivariatePolynomial::from_x(sorted[i] - last), 0, i + 1});
    }
    for (std::size_t i = 0; i < nonlinear; ++i) {
      entries.push_back({BivariatePolynomial::compose_x_plus_second(sorted[i]) -
                             BivariatePolynomial::from_x(last),
                         1, i + 1});
    }
    for (std::size_t i = nonlinear; i + 1 < r; ++i) {
      entries.push_back({BivariatePolynomial::from_x(sorted[i] - last), 0, i + 1});
    }
  }
  return entries;
}

/// Integer h at which every polynomial in `conditions` (coefficients of the
/// positive x-powers, plus the constant term when `include_constant`) of an
/// entry/difference vanishes.  Empty optional marks "vanishes identically".
std::optional<std::vector<mpz_class>> common_vanishing_h(const BivariatePolynomial& e,
                                                         bool include_constant) {
  std::vector<IntPolynomial> conditions;
  auto dx = e.deg_x();
  if (dx) {
    for (std::uint32_t k = include_constant ? 0 : 1; k <= *dx; ++k) {
      IntPolynomial c = e.x_coefficient(k);
      if (!c.is_zero()) conditions.push_back(std::move(c));
    }
  }
  if (conditions.empty()) {
    // Degenerate for every h (constant in x identically, or zero).
    return std::nullopt;
  }
  std::vector<mpz_class> candidates = integer_roots(conditions.front());
  std::vector<mpz_class> out;
  for (const mpz_class& h : candidates) {
    bool all = true;
    for (std::size_t i = 1; i < conditions.size(); ++i) {
      if (conditions[i](h) != 0) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(h);
  }
  return out;
}

std::vector<mpz_class> exceptional_h_impl(std::span<const IntPolynomial> sorted,
                                          ReductionKind kind) {
  const std::size_t r = sorted.size();
  std::set<mpz_class> out;
  out.insert(0);  // p_r(x+0) - p_r(x) is the zero entry
  auto entries = symbolic_entries(sorted, kind);
  auto member_degree = [&](std::size_t i) { return degree_or_minus_one(sorted[i - 1]); };
  for (const auto& e : entries) {
    // The r-th self-entry of the standard construction is exempt from the
    // nonzero-constant rule when p_r is linear; a zero entry always counts.
    const bool exempt_constant = kind == ReductionKind::standard && e.sigma == 1 &&
                                 e.member == r && member_degree(e.member) == 1;
    auto hs = common_vanishing_h(e.poly, exempt_constant);
    if (!hs) {
      if (e.sigma == 0) {
        throw PreconditionError(
            "exceptional_h_set: an unshifted entry is constant for every h; the input family "
            "violates the pairwise-difference clause");
      }
      throw InternalError("exceptional_h_set: entry degenerate for every h");
    }
    out.insert(hs->begin(), hs->end());
  }
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      const auto& ea = entries[a];
      const auto& eb = entries[b];
      if (kind == ReductionKind::standard && ea.member == eb.member &&
          member_degree(ea.member) == 1) {
        continue;  // the same-member pair of a linear polynomial is exempt
      }
      auto hs = common_vanishing_h(ea.poly - eb.poly, false);
      if (!hs) {
        throw PreconditionError(
            "exceptional_h_set: a pairwise difference is constant for every h; the input family "
            "violates the pairwise-difference clause");
      }
      out.insert(hs->begin(), hs->end());
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<mpz_class> exceptional_h_set(std::span<const IntPolynomial> sorted) {
  require_sorted(sorted, "exceptional_h_set");
  auto verdict = is_admissible_sequence(sorted);
  if (!verdict.holds()) {
    throw PreconditionError("exceptional_h_set: family is not admissible: " +
                            verdict.witness.value_or(""));
  }
  return exceptional_h_impl(sorted, ReductionKind::standard);
}

std::vector<mpz_class> exceptional_h_set_for(std::span<const IntPolynomial> sorted,
                                             ReductionKind kind) {
  require_sorted(sorted, "exceptional_h_set_for");
  if (kind == ReductionKind::linear_variant &&
      (count_linear(sorted) == 0 || count_nonlinear(sorted) == 0)) {
    throw PreconditionError("exceptional_h_set_for: linear_variant needs mixed degrees");
  }
  return exceptional_h_impl(sorted, kind);
}

bool reduction_degenerate_at(std::span<const IntPolynomial> sorted, const mpz_class& h,
                             ReductionKind kind) {
  if (h == 0) return true;
  const std::size_t r = sorted.size();
  std::vector<IntPolynomial> reduced;
  std::vector<std::pair<int, std::size_t>> tags;  // (sigma, member)
  if (kind == ReductionKind::standard) {
    pet_reduce_into(sorted, h, reduced);
    for (std::size_t i = 0; i + 1 < r; ++i) tags.push_back({0, i + 1});
    for (std::size_t i = 0; i < r; ++i) tags.push_back({1, i + 1});
  } else {
    pet_reduce_linear_variant_into(sorted, h, reduced);
    const std::size_t nonlinear = count_nonlinear(sorted);
    for (std::size_t i = 0; i < nonlinear; ++i) tags.push_back({0, i + 1});
    for (std::size_t i = 0; i < nonlinear; ++i) tags.push_back({1, i + 1});
    for (std::size_t i = nonlinear; i + 1 < r; ++i) tags.push_back({0, i + 1});
  }
  auto member_degree = [&](std::size_t i) { return degree_or_minus_one(sorted[i - 1]); };
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i].is_zero()) return true;
    if (reduced[i].is_constant()) {
      const bool exempt = kind == ReductionKind::standard && tags[i].first == 1 &&
                          tags[i].second == r && member_degree(tags[i].second) == 1;
      if (!exempt) return true;
    }
  }
  for (std::size_t a = 0; a < reduced.size(); ++a) {
    for (std::size_t b = a + 1; b < reduced.size(); ++b) {
      if (kind == ReductionKind::standard && tags[a].second == tags[b].second &&
          member_degree(tags[a].second) == 1) {
        continue;
      }
      IntPolynomial diff;
      diff.assign_difference(reduced[a], reduced[b]);
      if (diff.is_constant()) return true;
    }
  }
  return false;
}

}  // namespace wmix
