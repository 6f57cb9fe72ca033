#include <doctest.h>

#include "oracles.hpp"
#include "ratsurf/cohom.hpp"
#include "ratsurf/theta.hpp"

using namespace ratsurf;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

ThetaContext ctx_of(const Surface& s, const DivisorClass& L) { return make_context(s, L); }

const ThetaContext& plane_cubic() {
  static const ThetaContext c = ctx_of(Surface::projective_plane(), DivisorClass{3});
  return c;
}
const ThetaContext& genus_two_f0() {
  static const ThetaContext c = ctx_of(Surface::hirzebruch(0), DivisorClass{2, 3});
  return c;
}
const ThetaContext& genus_two_f1() {
  static const ThetaContext c = ctx_of(Surface::hirzebruch(1), DivisorClass{2, 4});
  return c;
}

std::vector<ThetaContext> supported_contexts() {
  const auto p2 = Surface::projective_plane();
  return {ctx_of(p2, DivisorClass{1}),
          ctx_of(p2, DivisorClass{2}),
          ctx_of(Surface::hirzebruch(0), DivisorClass{0, 3}),
          ctx_of(Surface::hirzebruch(1), DivisorClass{1, 4}),
          ctx_of(Surface::hirzebruch(2), DivisorClass{3, 0}),
          ctx_of(Surface::blowup_hirzebruch(0), DivisorClass{1, 1, -1}),
          plane_cubic(),
          ctx_of(Surface::hirzebruch(0), DivisorClass{2, 2}),
          ctx_of(Surface::hirzebruch(1), DivisorClass{2, 3}),
          genus_two_f0(),
          genus_two_f1()};
}

// Independent evaluation of the decomposition: h0(P^l, O(m)) as a monomial count.
Integer decomposition_h0(const GradedBundle& gb, std::int64_t l, std::int64_t n) {
  Integer total = 0;
  for (const auto& s : gb.summands()) {
    const std::int64_t m = n + s.twist;
    if (m < 0) continue;
    total += s.mult * oracle::pascal(static_cast<int>(m + l), static_cast<int>(l));
  }
  return total;
}

}  // namespace

TEST_CASE("graded bundle bookkeeping") {
  GradedBundle gb;
  gb.add(-2, 1);
  gb.add(0, 1);
  gb.add(-2, 2);
  gb.add(-5, 1);
  CHECK(gb == GradedBundle{{0, 1}, {-2, 3}, {-5, 1}});
  CHECK(gb.to_string() == "O(0) + O(-2)^3 + O(-5)");
  CHECK(rank(gb) == 5);
  CHECK_THROWS_AS(gb.add(-1, 0), std::invalid_argument);
  CHECK((GradedBundle{{0, 1}} + GradedBundle{{-1, 2}}) == GradedBundle{{0, 1}, {-1, 2}});
}

TEST_CASE("context") {
  const auto& c = plane_cubic();
  CHECK(c.genus == 1);
  CHECK(c.dim == 9);
  CHECK(c.branch == Branch::GenusOne);
  CHECK(genus_two_f0().dim == 11);
  CHECK(genus_two_f1().dim == 11);
  CHECK(genus_two_f1().genus == 2);
}

TEST_CASE("pushforward decomposition") {
  CHECK(pushforward_decomposition(plane_cubic(), 3) == GradedBundle{{0, 1}, {-2, 1}, {-3, 1}});
  CHECK(pushforward_decomposition(genus_two_f0(), 3) ==
        GradedBundle{{0, 1}, {-2, 3}, {-3, 4}, {-4, 1}});
  CHECK(pushforward_decomposition(genus_two_f0(), 2) == GradedBundle{{0, 1}, {-2, 3}});
  for (const auto& ctx : supported_contexts()) {
    CHECK(pushforward_decomposition(ctx, 1) == GradedBundle{{0, 1}});
  }
  // Twists stay non-positive and descend.
  for (std::int64_t r = 1; r <= 20; ++r) {
    const auto gb = pushforward_decomposition(genus_two_f1(), r);
    for (std::size_t i = 0; i < gb.summands().size(); ++i) {
      CHECK(gb.summands()[i].twist <= 0);
      if (i) CHECK(gb.summands()[i].twist < gb.summands()[i - 1].twist);
    }
  }
}

TEST_CASE("unsupported branches") {
  const auto quartic = ctx_of(Surface::projective_plane(), DivisorClass{4});
  CHECK(quartic.branch == Branch::PositiveGenusGeneral);
  CHECK(pushforward_decomposition(quartic, 1) == GradedBundle{{0, 1}});
  CHECK_THROWS_AS(pushforward_decomposition(quartic, 2), UnsupportedBranch);
  CHECK_THROWS_AS(z_series(quartic, 3, 5), UnsupportedBranch);
  CHECK_THROWS_AS(h0_lambda(quartic, 2, 0), UnsupportedBranch);
  const auto odd = ctx_of(Surface::hirzebruch(2), DivisorClass{2, 5});
  CHECK(odd.branch == Branch::Unsupported);
  CHECK_THROWS_AS(pushforward_decomposition(odd, 2), UnsupportedBranch);
  CHECK_THROWS_AS(pushforward_decomposition(plane_cubic(), 0), std::invalid_argument);
  // r = 1 uses the structure-sheaf pushforward on every positive-genus class.
  CHECK(z_series(quartic, 1, 3).coeffs == expand_rational_gf(Polynomial{1}, 14, 3).coeffs);
}

TEST_CASE("rank") {
  CHECK(rank(pushforward_decomposition(plane_cubic(), 5)) == 5);
  CHECK(rank(pushforward_decomposition(genus_two_f0(), 3)) == 9);
  for (std::int64_t r = 1; r <= 50; ++r) {
    CHECK(rank(pushforward_decomposition(plane_cubic(), r)) == r);
    CHECK(rank(pushforward_decomposition(genus_two_f0(), r)) == r * r);
    CHECK(rank(pushforward_decomposition(genus_two_f1(), r)) == r * r);
  }
  for (const auto& ctx : supported_contexts()) {
    if (ctx.branch == Branch::GenusNonPositive) {
      CHECK(rank(pushforward_decomposition(ctx, 17)) == 1);
    }
  }
}

TEST_CASE("z_series examples") {
  const auto conic = ctx_of(Surface::projective_plane(), DivisorClass{2});
  for (std::int64_t r : {1, 2, 9}) CHECK(z_series(conic, r, 2).coeffs == ints({1, 6, 21}));
  CHECK(z_series(plane_cubic(), 2, 2).coeffs == ints({1, 10, 56}));
  CHECK(z_series(genus_two_f0(), 2, 2).coeffs == ints({1, 12, 81}));
  CHECK(z_numerator(plane_cubic(), 4) == Polynomial{1, 0, 1, 1, 1});
  CHECK(z_numerator(genus_two_f0(), 3) == Polynomial{1, 0, 3, 4, 1});
  CHECK(z_numerator(genus_two_f0(), 1) == Polynomial{1});
}

TEST_CASE("z_from_decomposition examples") {
  const auto s = z_from_decomposition(GradedBundle{{0, 1}}, 9, 6);
  for (int n = 0; n <= 6; ++n) CHECK(s.coeffs[static_cast<std::size_t>(n)] == oracle::pascal(n + 9, 9));
  CHECK(z_from_decomposition(GradedBundle{{0, 1}, {-2, 1}}, 9, 2).coeffs == ints({1, 10, 56}));
  CHECK(z_from_decomposition(GradedBundle{{0, 1}, {-2, 3}}, 11, 1).coeffs == ints({1, 12}));
  // |L| a single point.
  CHECK(z_from_decomposition(GradedBundle{{0, 1}}, 0, 3).coeffs == ints({1, 1, 1, 1}));
}

TEST_CASE("closed form agrees with the decomposition") {
  for (const auto& ctx : supported_contexts()) {
    const std::int64_t r_max = ctx.branch == Branch::GenusNonPositive ? 5 : 30;
    for (std::int64_t r = 1; r <= r_max; ++r) {
      const auto gb = pushforward_decomposition(ctx, r);
      const auto closed = z_series(ctx, r, 60);
      CHECK(z_from_decomposition(gb, ctx.dim, 60) == closed);
      for (std::int64_t n = 0; n <= 60; n += 7) {
        CHECK(closed.coeffs[static_cast<std::size_t>(n)] == decomposition_h0(gb, ctx.dim, n));
      }
    }
  }
}

TEST_CASE("h0_lambda") {
  CHECK(h0_lambda(plane_cubic(), 1, 0) == 1);
  for (std::int64_t e : {0, 1}) {
    const auto ctx = ctx_of(Surface::hirzebruch(e), DivisorClass{2, e + 3});
    CHECK(h0_lambda(ctx, 2, 1) == 12);
  }
  CHECK(h0_lambda(ctx_of(Surface::projective_plane(), DivisorClass{1}), 7, 0) == 1);
  CHECK(h0_lambda(plane_cubic(), 3, -1) == 0);
}

TEST_CASE("euler characteristic of lambda") {
  CHECK(euler_char_lambda(plane_cubic(), 2, 0) == 1);
  const auto line = ctx_of(Surface::projective_plane(), DivisorClass{1});
  CHECK(euler_char_lambda(line, 4, -1) == 0);
  // Holds for n >= 0 as long as every twist stays >= -l: r <= l in genus one,
  // r <= l - 1 in genus two (the lowest twist there is -(r+1)).
  for (const auto& ctx : supported_contexts()) {
    std::int64_t r_max = 12;
    if (ctx.branch == Branch::GenusOne) r_max = ctx.dim;
    if (ctx.branch == Branch::GenusTwo) r_max = ctx.dim - 1;
    for (std::int64_t r = 1; r <= r_max; ++r) {
      for (std::int64_t n = 0; n <= 20; ++n) {
        CHECK(euler_char_lambda(ctx, r, n) == h0_lambda(ctx, r, n));
      }
    }
  }
  // Past that, O(-r) on P^l picks up top cohomology at n = 0.
  CHECK(h0_lambda(plane_cubic(), 10, 0) == 1);
  CHECK(euler_char_lambda(plane_cubic(), 10, 0) == 0);
  CHECK(euler_char_lambda(plane_cubic(), 10, 1) == h0_lambda(plane_cubic(), 10, 1));
  CHECK_FALSE(higher_cohomology_vanishes(pushforward_decomposition(plane_cubic(), 10), 9, 0));
  // Past the last numerator term every binomial is in its polynomial range.
  for (std::int64_t r = 1; r <= 10; ++r) {
    for (std::int64_t n = r + 2; n <= r + 12; ++n) {
      const auto num = z_numerator(genus_two_f1(), r);
      Integer sum = 0;
      for (std::size_t k = 0; k < num.coeffs().size(); ++k) {
        sum += num.coeffs()[k] * binomial_polynomial(Integer(n - static_cast<std::int64_t>(k)), 11);
      }
      CHECK(sum == euler_char_lambda(genus_two_f1(), r, n));
      CHECK(sum == h0_lambda(genus_two_f1(), r, n));
    }
  }
}

TEST_CASE("higher cohomology vanishing") {
  CHECK(higher_cohomology_vanishes(pushforward_decomposition(genus_two_f0(), 3), 11, 0));
  CHECK_FALSE(higher_cohomology_vanishes(GradedBundle{{-5, 1}}, 3, 0));
  CHECK(higher_cohomology_vanishes(GradedBundle{{0, 1}}, 4, 0));
  for (const auto& ctx : supported_contexts()) {
    for (std::int64_t r = 1; r <= std::max<std::int64_t>(1, ctx.dim - 2); ++r) {
      const auto gb = pushforward_decomposition(ctx, r);
      for (std::int64_t n = 0; n <= 10; ++n) CHECK(higher_cohomology_vanishes(gb, ctx.dim, n));
    }
  }
}

TEST_CASE("recursions") {
  CHECK_THROWS_AS(recursion_check_g2(1), std::invalid_argument);
  for (std::int64_t r = 2; r <= 50; ++r) CHECK(recursion_check_g2(r));
  for (std::int64_t r = 1; r <= 50; ++r) CHECK(sequence_additivity_g1(r));
  // The step at r = 2 adds O(-3)^4 + O(-4).
  CHECK(pushforward_decomposition(genus_two_f0(), 3) ==
        pushforward_decomposition(genus_two_f0(), 2) + GradedBundle{{-3, 4}, {-4, 1}});
}

TEST_CASE("theta restriction twist") {
  CHECK(theta_restriction_twist(1) == -1);
  CHECK(theta_restriction_twist(3) == -3);
  CHECK(theta_restriction_twist(0) == 0);
  // chi(O(-L)) = 1 on the genus-one classes is what fixes the twist to -r.
  CHECK(euler_char(Surface::projective_plane(), DivisorClass{-3}) == 1);
  CHECK(euler_char(Surface::hirzebruch(0), DivisorClass{-2, -2}) == 1);
}

TEST_CASE("dualizing twist") {
  const auto p2 = Surface::projective_plane();
  CHECK(dualizing_twist(p2, DivisorClass{3}) == -9);
  CHECK(dualizing_twist(p2, DivisorClass{0}) == 0);
  for (std::int64_t e : {0, 1}) {
    CHECK(dualizing_twist(Surface::hirzebruch(e), DivisorClass{2, e + 3}) == -10);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = Surface::hirzebruch(oracle::uniform(0, 4));
    const DivisorClass a{oracle::uniform(-9, 9), oracle::uniform(-9, 9)};
    const DivisorClass b{oracle::uniform(-9, 9), oracle::uniform(-9, 9)};
    CHECK(dualizing_twist(s, a + b) == dualizing_twist(s, a) + dualizing_twist(s, b));
  }
}

TEST_CASE("gtsec cohomology") {
  auto r2 = verify_gtsec_cohomology(0, 2);
  CHECK(r2.h0_pos == 3);
  CHECK(r2.h1_neg == 0);
  CHECK(r2.ok);
  auto r5 = verify_gtsec_cohomology(1, 5);
  CHECK(r5.h0_pos == 6);
  CHECK(r5.h1_neg == 3);
  CHECK(r5.ok);
  // H^0(r(L+K) - L) = 0 at e = 0, r = 2.
  CHECK(cohomology_hirzebruch(0, -2, -1).h0 == 0);
  for (std::int64_t e : {0, 1}) {
    for (std::int64_t r = 2; r <= 40; ++r) {
      const auto res = verify_gtsec_cohomology(e, r);
      CHECK(res.ok);
      CHECK(res.h0_pos == r + 1);
      CHECK(res.h1_neg == r - 2);
    }
  }
  CHECK_THROWS_AS(verify_gtsec_cohomology(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_gtsec_cohomology(0, 1), std::invalid_argument);
}
