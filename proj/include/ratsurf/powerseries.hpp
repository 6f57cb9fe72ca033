#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratsurf/integer.hpp"

namespace ratsurf {

/// Dense univariate polynomial in t with exact integer coefficients.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial monomial(const Integer& coeff, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Coefficient of t^k, zero past the degree.
  Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  /// "1 + 3t^2 + 4t^3" style rendering.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Coefficients c_0..c_N of a truncated power series.
struct SeriesCoefficients {
  std::size_t trunc = 0;
  std::vector<Integer> coeffs;

  friend bool operator==(const SeriesCoefficients&, const SeriesCoefficients&) = default;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// C(n, k) for n >= 0; zero when k > n. Negative n is rejected.
Integer binom(const Integer& n, std::int64_t k);

/// Value at m of the integer-valued polynomial C(m + l, l) = (m+1)...(m+l)/l!,
/// defined for every integer m.
Integer binomial_polynomial(const Integer& m, std::int64_t l);

/// First N+1 coefficients of numerator / (1 - t)^(l+1), using
/// [t^n] = sum_k numerator[k] * C(n - k + l, l).
SeriesCoefficients expand_rational_gf(const Polynomial& numerator, std::int64_t l, std::size_t N);

/// Truncated product of two series at the smaller truncation.
SeriesCoefficients series_mul(const SeriesCoefficients& a, const Polynomial& p);

}  // namespace ratsurf
