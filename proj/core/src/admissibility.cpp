#include "wmix/admissibility.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "wmix/errors.hpp"

namespace wmix {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

std::string AdmissibilityVerdict::to_json_string(int indent) const {
  nlohmann::json j;
  j["verdict"] = to_string(verdict);
  if (witness) j["witness"] = *witness;
  if (literal_verdict) j["literal_verdict"] = to_string(*literal_verdict);
  if (literal_witness) j["literal_witness"] = *literal_witness;
  return j.dump(indent);
}

namespace {

AdmissibilityVerdict fail(std::string witness) {
  return {Verdict::fails, std::move(witness), std::nullopt, std::nullopt};
}

}  // namespace

AdmissibilityVerdict is_admissible_sequence(std::span<const IntPolynomial> ps) {
  if (ps.empty()) throw PreconditionError("is_admissible_sequence: empty sequence");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto d = ps[i].degree();
    if (!d || *d == 0) {
      std::ostringstream os;
      os << "member " << (i + 1) << ": degree is not positive (" << ps[i].to_string()
         << "), so p(n) does not tend to infinity";
      return fail(os.str());
    }
    if (ps[i].leading_coefficient() < 0) {
      std::ostringstream os;
      os << "member " << (i + 1) << ": leading coefficient "
         << ps[i].leading_coefficient().get_str() << " is negative, so p(n) -> -infinity";
      return fail(os.str());
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      IntPolynomial diff = ps[i] - ps[j];
      if (diff.is_constant()) {
        std::ostringstream os;
        os << "pair (" << (i + 1) << "," << (j + 1) << "): difference is constant ("
           << diff.to_string() << ")";
        return fail(os.str());
      }
    }
  }
  return {};
}

AdmissibilityVerdict is_uniformly_admissible(std::span<const BivariatePolynomial> fs) {
  if (fs.empty()) throw PreconditionError("is_uniformly_admissible: empty family");
  AdmissibilityVerdict out;
  // Member clause, sign-relaxed: deg_x > 0 with an N-free nonzero leading
  // x-coefficient.  The literal clause additionally requires it positive.
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto d = fs[i].deg_x();
    if (!d || *d == 0) {
      std::ostringstream os;
      os << "member " << (i + 1) << ": x-degree is not positive";
      return fail(os.str());
    }
    IntPolynomial lc = fs[i].x_coefficient(*d);
    if (!lc.is_constant()) {
      std::ostringstream os;
      os << "member " << (i + 1) << ": leading x-coefficient depends on N ("
         << lc.to_string("N") << ")";
      return fail(os.str());
    }
    if (lc.leading_coefficient() < 0 && !out.literal_verdict) {
      out.literal_verdict = Verdict::fails;
      std::ostringstream os;
      os << "member " << (i + 1) << ": leading x-coefficient "
         << lc.leading_coefficient().get_str() << " is negative";
      out.literal_witness = os.str();
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      BivariatePolynomial diff = fs[i] - fs[j];
      auto d = diff.deg_x();
      if (!d || *d == 0) {
        std::ostringstream os;
        os << "pair (" << (i + 1) << "," << (j + 1) << "): difference has x-degree "
           << (d ? "0" : "of the zero polynomial") << " (" << diff.to_string() << ")";
        return fail(os.str());
      }
      IntPolynomial lc = diff.x_coefficient(*d);
      if (!lc.is_constant()) {
        std::ostringstream os;
        os << "pair (" << (i + 1) << "," << (j + 1)
           << "): difference has leading x-coefficient depending on N (" << lc.to_string("N")
           << ")";
        return fail(os.str());
      }
    }
  }
  if (!out.literal_verdict) out.literal_verdict = Verdict::holds;
  return out;
}

AdmissibilityVerdict is_admissible_family(std::span<const BivariatePolynomial> fs,
                                          long test_horizon) {
  if (fs.empty()) throw PreconditionError("is_admissible_family: empty family");
  if (test_horizon < 1) throw PreconditionError("is_admissible_family: test_horizon must be >= 1");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto d = fs[i].deg_x();
    if (!d || *d == 0) {
      std::ostringstream os;
      os << "member " << (i + 1) << ": x-degree is not positive";
      return fail(os.str());
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      BivariatePolynomial diff = fs[i] - fs[j];
      auto d = diff.deg_x();
      if (!d || *d == 0) {
        std::ostringstream os;
        os << "pair (" << (i + 1) << "," << (j + 1) << "): difference is constant in x ("
           << diff.to_string() << ")";
        return fail(os.str());
      }
    }
  }
  // Nonnegativity on {0 <= x <= N}.  Certificate: all coefficients of
  // f(x, N -> x+y) nonnegative implies f >= 0 on the triangle.
  std::vector<std::size_t> uncertified;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool certified = true;
    for (const auto& [key, c] : fs[i].substitute_second_x_plus_second().terms()) {
      if (c < 0) {
        certified = false;
        break;
      }
    }
    if (!certified) uncertified.push_back(i);
  }
  for (std::size_t i : uncertified) {
    for (long n = 1; n <= test_horizon; ++n) {
      for (long x = 0; x <= n; ++x) {
        mpz_class v = fs[i].eval(x, n);
        if (v < 0) {
          std::ostringstream os;
          os << "member " << (i + 1) << ": negative value " << v.get_str() << " at x = " << x
             << ", N = " << n;
          return fail(os.str());
        }
      }
    }
  }
  if (!uncertified.empty()) {
    std::ostringstream os;
    os << "nonnegativity not certified for member(s)";
    for (std::size_t i : uncertified) os << " " << (i + 1);
    os << " and no counterexample found with N <= " << test_horizon;
    return {Verdict::undetermined, os.str(), std::nullopt, std::nullopt};
  }
  return {};
}

}  // namespace wmix
