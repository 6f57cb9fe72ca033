#include "ratsurf/powerseries.hpp"

#include <sstream>
#include <stdexcept>

namespace ratsurf {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(const Integer& coeff, std::size_t degree) {
  std::vector<Integer> c(degree + 1);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    const Integer mag = abs(c);
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
  }
  return Polynomial(std::move(out));
}

Integer binom(const Integer& n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binom: negative n is not supported");
  if (k < 0 || Integer(k) > n) return 0;
  // C(n, k) = C(n, n-k); iterate over the smaller side.
  Integer kk = k;
  if (n - kk < kk) kk = n - kk;
  const auto steps = static_cast<std::int64_t>(kk);
  Integer acc = 1;
  for (std::int64_t i = 1; i <= steps; ++i) {
    acc *= n - steps + i;
    acc /= i;  // exact: acc is C(n - steps + i, i) here
  }
  return acc;
}

Integer binomial_polynomial(const Integer& m, std::int64_t l) {
  if (l < 0) throw std::domain_error("binomial_polynomial: negative degree");
  // (m+1)(m+2)...(m+l)/l!; each prefix product over i terms is divisible by i!.
  Integer acc = 1;
  for (std::int64_t i = 1; i <= l; ++i) {
    acc *= m + i;
    acc /= i;
  }
  return acc;
}

SeriesCoefficients expand_rational_gf(const Polynomial& numerator, std::int64_t l, std::size_t N) {
  if (l < 0) throw std::domain_error("expand_rational_gf: negative l");
  SeriesCoefficients out{N, std::vector<Integer>(N + 1)};
  for (std::size_t k = 0; k < numerator.coeffs().size() && k <= N; ++k) {
    const Integer& c = numerator.coeffs()[k];
    if (c == 0) continue;
    for (std::size_t n = k; n <= N; ++n) {
      out.coeffs[n] += c * binom(Integer(n - k + static_cast<std::size_t>(l)), l);
    }
  }
  return out;
}

SeriesCoefficients series_mul(const SeriesCoefficients& a, const Polynomial& p) {
  SeriesCoefficients out{a.trunc, std::vector<Integer>(a.trunc + 1)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < p.coeffs().size() && i + j <= a.trunc; ++j) {
      out.coeffs[i + j] += a.coeffs[i] * p.coeffs()[j];
    }
  }
  return out;
}

}  // namespace ratsurf
