#include "ratsurf/theta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ratsurf/cohom.hpp"

namespace ratsurf {

GradedBundle::GradedBundle(std::initializer_list<std::pair<std::int64_t, long long>> summands) {
  for (const auto& [twist, mult] : summands) add(twist, mult);
}

void GradedBundle::add(std::int64_t twist, const Integer& mult) {
  if (mult <= 0) throw std::invalid_argument("GradedBundle multiplicities must be positive");
  auto it = std::find_if(summands_.begin(), summands_.end(),
                         [twist](const Summand& s) { return s.twist <= twist; });
  if (it != summands_.end() && it->twist == twist) {
    it->mult += mult;
  } else {
    summands_.insert(it, Summand{twist, mult});
  }
}

GradedBundle& GradedBundle::operator+=(const GradedBundle& other) {
  for (const auto& s : other.summands_) add(s.twist, s.mult);
  return *this;
}

std::string GradedBundle::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out << " + ";
    out << "O(" << summands_[i].twist << ")";
    if (summands_[i].mult != 1) out << '^' << summands_[i].mult;
  }
  return summands_.empty() ? "0" : out.str();
}

ThetaContext make_context(const Surface& s, const DivisorClass& L) {
  ThetaContext ctx{s, L, 0, 0, Branch::Unsupported};
  ctx.branch = classify_branch(s, L);
  ctx.genus = arithmetic_genus(s, L);
  ctx.dim = to_int64(linear_system_dim(s, L), "dim |L|");
  return ctx;
}

std::string provenance(const ThetaContext& ctx, std::int64_t r) {
  switch (ctx.branch) {
    case Branch::GenusNonPositive: return "genus<=0: M = |L|, Theta = O";
    case Branch::GenusOne:
      return r == 1 ? "r=1: pi_* Theta = O" : "genus 1: pi_* Theta^r = O + sum_{i=2}^r O(-i)";
    case Branch::GenusTwo:
      return r == 1 ? "r=1: pi_* Theta = O"
                    : "genus 2: pi_* Theta^r = O + O(-2)^3 + sum_{i=3}^r (O(-i)^{i+1} + O(-i-1)^{i-2})";
    case Branch::PositiveGenusGeneral:
    case Branch::Unsupported:
      return "r=1: pi_* Theta = O";
  }
  return {};
}

void require_supported(const ThetaContext& ctx, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (r == 1) return;
  if (ctx.branch == Branch::PositiveGenusGeneral || ctx.branch == Branch::Unsupported) {
    throw UnsupportedBranch(
        "no decomposition of pi_* Theta^r is known for r >= 2 on " +
        format_class(ctx.surface, ctx.L) + " (" + to_string(ctx.branch) + ", genus " +
        ctx.genus.str() +
        "): the pushforward is only known to be torsion-free on |L|, locally free over the "
        "integral locus, and isomorphic to O_{|L|} when r = 1");
  }
}

GradedBundle pushforward_decomposition(const ThetaContext& ctx, std::int64_t r) {
  require_supported(ctx, r);
  GradedBundle gb{{0, 1}};
  if (r == 1 || ctx.branch == Branch::GenusNonPositive) return gb;
  if (ctx.branch == Branch::GenusOne) {
    for (std::int64_t i = 2; i <= r; ++i) gb.add(-i, 1);
    return gb;
  }
  // Genus two.
  gb.add(-2, 3);
  for (std::int64_t i = 3; i <= r; ++i) {
    gb.add(-i, i + 1);
    gb.add(-i - 1, i - 2);
  }
  return gb;
}

Integer rank(const GradedBundle& gb) {
  Integer total = 0;
  for (const auto& s : gb.summands()) total += s.mult;
  return total;
}

Polynomial z_numerator(const ThetaContext& ctx, std::int64_t r) {
  require_supported(ctx, r);
  if (r == 1 || ctx.branch == Branch::GenusNonPositive) return Polynomial{1};
  std::vector<Integer> c(static_cast<std::size_t>(r) + 2);
  c[0] = 1;
  if (ctx.branch == Branch::GenusOne) {
    // 1 + t^2 + ... + t^r
    for (std::int64_t i = 2; i <= r; ++i) c[static_cast<std::size_t>(i)] = 1;
    return Polynomial(std::move(c));
  }
  // 1 + 3t^2 + sum_{i=3}^r ((i+1) t^i + (i-2) t^(i+1))
  c[2] += 3;
  for (std::int64_t i = 3; i <= r; ++i) {
    c[static_cast<std::size_t>(i)] += i + 1;
    c[static_cast<std::size_t>(i) + 1] += i - 2;
  }
  return Polynomial(std::move(c));
}

SeriesCoefficients z_series(const ThetaContext& ctx, std::int64_t r, std::size_t N) {
  return expand_rational_gf(z_numerator(ctx, r), ctx.dim, N);
}

SeriesCoefficients z_from_decomposition(const GradedBundle& gb, std::int64_t l, std::size_t N) {
  SeriesCoefficients out{N, std::vector<Integer>(N + 1)};
  for (std::size_t n = 0; n <= N; ++n) {
    for (const auto& s : gb.summands()) {
      const Integer m = Integer(static_cast<std::int64_t>(n)) + s.twist;
      if (l == 0) {
        // |L| is a point; same convention as C(m + 0, 0) for m >= 0.
        if (m >= 0) out.coeffs[n] += s.mult;
        continue;
      }
      out.coeffs[n] += s.mult * cohomology_projective_space(l, m).h0;
    }
  }
  return out;
}

Integer h0_lambda(const ThetaContext& ctx, std::int64_t r, std::int64_t n) {
  const Polynomial num = z_numerator(ctx, r);
  if (n < 0) return 0;
  Integer total = 0;
  for (std::size_t k = 0; k < num.coeffs().size() && static_cast<std::int64_t>(k) <= n; ++k) {
    total += num.coeffs()[k] * binom(Integer(n - static_cast<std::int64_t>(k) + ctx.dim), ctx.dim);
  }
  return total;
}

Integer euler_char_lambda(const ThetaContext& ctx, std::int64_t r, std::int64_t n) {
  const GradedBundle gb = pushforward_decomposition(ctx, r);
  Integer total = 0;
  for (const auto& s : gb.summands()) {
    total += s.mult * binomial_polynomial(Integer(n + s.twist), ctx.dim);
  }
  return total;
}

bool higher_cohomology_vanishes(const GradedBundle& gb, std::int64_t l, std::int64_t n) {
  return std::all_of(gb.summands().begin(), gb.summands().end(),
                     [&](const GradedBundle::Summand& s) { return n + s.twist >= -l; });
}

namespace {

ThetaContext genus_two_context() { return make_context(Surface::hirzebruch(0), DivisorClass{2, 3}); }
ThetaContext genus_one_context() { return make_context(Surface::projective_plane(), DivisorClass{3}); }

}  // namespace

bool recursion_check_g2(std::int64_t r) {
  if (r < 2) throw std::invalid_argument("recursion_check_g2 needs r >= 2");
  const ThetaContext ctx = genus_two_context();
  GradedBundle expected = pushforward_decomposition(ctx, r);
  expected.add(-(r + 1), r + 2);
  expected.add(-(r + 2), r - 1);
  return pushforward_decomposition(ctx, r + 1) == expected;
}

bool sequence_additivity_g1(std::int64_t r) {
  if (r < 1) throw std::invalid_argument("sequence_additivity_g1 needs r >= 1");
  const ThetaContext ctx = genus_one_context();
  GradedBundle expected = pushforward_decomposition(ctx, r);
  expected.add(theta_restriction_twist(r + 1), 1);
  return pushforward_decomposition(ctx, r + 1) == expected;
}

std::int64_t theta_restriction_twist(std::int64_t r) { return -r; }

Integer dualizing_twist(const Surface& s, const DivisorClass& L) {
  return intersect(s, L, canonical_class(s));
}

GtsecCohomology verify_gtsec_cohomology(std::int64_t e, std::int64_t r) {
  if (e != 0 && e != 1) throw std::invalid_argument("verify_gtsec_cohomology needs e in {0,1}");
  if (r < 2) throw std::invalid_argument("verify_gtsec_cohomology needs r >= 2");
  const Surface s = Surface::hirzebruch(e);
  const DivisorClass L{2, e + 3};
  const DivisorClass adjoint = Integer(r) * (L + canonical_class(s));
  const DivisorClass shifted = adjoint - L;
  const CohomologyTable pos = cohomology(s, adjoint);
  const CohomologyTable neg = cohomology(s, shifted);
  GtsecCohomology out{pos.h0, neg.h1, false};
  out.ok = pos.h0 == r + 1 && neg.h1 == r - 2 && neg.h0 == 0 && neg.h2 == 0 && pos.h1 == 0 &&
           pos.h2 == 0;
  return out;
}

}  // namespace ratsurf
