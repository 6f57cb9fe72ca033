#pragma once

// Pushforward of powers of the theta bundle along the support map M -> |L|,
// and the generating functions Z^r(t) = sum_n h^0(M, lambda_{c^r_n}) t^n it
// determines, with lambda_{c^r_n} identified with Theta^r (x) pi^* O(n).

#include <cstdint>
#include <string>
#include <vector>

#include "ratsurf/conditions.hpp"
#include "ratsurf/picard.hpp"
#include "ratsurf/powerseries.hpp"

namespace ratsurf {

/// Raised when no closed form is known for the requested (branch, r).
class UnsupportedBranch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Direct sum of twists O_{|L|}(twist)^{mult}; twists descend, equal twists merged.
class GradedBundle {
 public:
  struct Summand {
    std::int64_t twist;
    Integer mult;
    friend bool operator==(const Summand&, const Summand&) = default;
  };

  GradedBundle() = default;
  GradedBundle(std::initializer_list<std::pair<std::int64_t, long long>> summands);

  void add(std::int64_t twist, const Integer& mult);
  /// Multiset union.
  GradedBundle& operator+=(const GradedBundle& other);
  friend GradedBundle operator+(GradedBundle a, const GradedBundle& b) { return a += b; }

  const std::vector<Summand>& summands() const { return summands_; }
  std::string to_string() const;

  friend bool operator==(const GradedBundle&, const GradedBundle&) = default;

 private:
  std::vector<Summand> summands_;
};

struct ThetaContext {
  Surface surface;
  DivisorClass L;
  Integer genus;
  std::int64_t dim = 0;  ///< dim |L|
  Branch branch = Branch::Unsupported;
};

/// Computes genus, dim |L| and branch for an effective nonzero L.
ThetaContext make_context(const Surface& s, const DivisorClass& L);

/// Which result supplies the numbers for (ctx, r); used as a provenance tag.
std::string provenance(const ThetaContext& ctx, std::int64_t r);

/// Throws UnsupportedBranch when (ctx.branch, r) has no known decomposition.
void require_supported(const ThetaContext& ctx, std::int64_t r);

GradedBundle pushforward_decomposition(const ThetaContext& ctx, std::int64_t r);

/// Sum of multiplicities.
Integer rank(const GradedBundle& gb);

/// Closed-form numerator of Z^r(t) over (1 - t)^(l+1).
Polynomial z_numerator(const ThetaContext& ctx, std::int64_t r);

SeriesCoefficients z_series(const ThetaContext& ctx, std::int64_t r, std::size_t N);

/// [t^n] = sum over summands of mult * h^0(P^l, O(n + twist)).
SeriesCoefficients z_from_decomposition(const GradedBundle& gb, std::int64_t l, std::size_t N);

/// h^0(M, lambda_{c^r_n}); zero for n < 0.
Integer h0_lambda(const ThetaContext& ctx, std::int64_t r, std::int64_t n);

/// chi(M, lambda_{c^r_n}) through the binomial polynomial, valid for every n.
Integer euler_char_lambda(const ThetaContext& ctx, std::int64_t r, std::int64_t n);

/// True iff no summand of gb(n) has top cohomology on P^l.
bool higher_cohomology_vanishes(const GradedBundle& gb, std::int64_t l, std::int64_t n);

/// Genus-two step: decomposition(r+1) = decomposition(r) + O(-r-1)^{r+2} + O(-r-2)^{r-1}.
bool recursion_check_g2(std::int64_t r);

/// Genus-one step: decomposition(r+1) = decomposition(r) + O(-r-1).
bool sequence_additivity_g1(std::int64_t r);

/// Theta^r restricted to the theta divisor is O_{|L|}(-r) in genus one.
std::int64_t theta_restriction_twist(std::int64_t r);

/// The dualizing sheaf of M is pi^* O_{|L|}(1)^{L.K}; returns L.K.
Integer dualizing_twist(const Surface& s, const DivisorClass& L);

struct GtsecCohomology {
  Integer h0_pos;  ///< h^0(r(L+K))
  Integer h1_neg;  ///< h^1(r(L+K) - L)
  bool ok = false;
};

/// Cohomology of r(L+K) and r(L+K) - L for L = 2G + (e+3)F on F_e, e in {0,1}.
GtsecCohomology verify_gtsec_cohomology(std::int64_t e, std::int64_t r);

}  // namespace ratsurf
