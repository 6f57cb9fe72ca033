#include "ratsurf/cohom.hpp"

#include <stdexcept>

#include "ratsurf/powerseries.hpp"

namespace ratsurf {

namespace {

Integer h0_p2(const Integer& d) { return d < 0 ? Integer(0) : binom(d + 2, 2); }

// h^0(aG + bF) on F_e through pi_* O(aG + bF) = sum_{k=0}^{a} O(b - k e) on P^1.
// Terms are positive for k <= b / e, so the sum has the closed form
// (K+1)(b+1) - e K(K+1)/2 with K = min(a, floor(b/e)).
Integer h0_fe(std::int64_t e, const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) return 0;
  Integer top = a;
  if (e > 0) {
    const Integer cap = b / e;
    if (cap < top) top = cap;
  }
  return (top + 1) * (b + 1) - Integer(e) * top * (top + 1) / 2;
}

}  // namespace

CohomologyTable cohomology_p2(const Integer& d) {
  const Surface s = Surface::projective_plane();
  CohomologyTable t;
  t.h0 = h0_p2(d);
  t.h2 = h0_p2(-d - 3);
  t.chi = euler_char(s, DivisorClass(std::vector<Integer>{d}));
  t.h1 = t.h0 + t.h2 - t.chi;
  return t;
}

CohomologyTable cohomology_hirzebruch(std::int64_t e, const Integer& a, const Integer& b) {
  const Surface s = Surface::hirzebruch(e);
  CohomologyTable t;
  t.h0 = h0_fe(e, a, b);
  // Serre duality with K = -2G - (e+2)F.
  t.h2 = h0_fe(e, -2 - a, -(e + 2) - b);
  t.chi = euler_char(s, DivisorClass(std::vector<Integer>{a, b}));
  t.h1 = t.h0 + t.h2 - t.chi;
  return t;
}

ProjectiveSpaceCohomology cohomology_projective_space(std::int64_t l, const Integer& m) {
  if (l < 1) throw std::invalid_argument("cohomology_projective_space: l must be >= 1");
  ProjectiveSpaceCohomology out;
  out.h0 = m < 0 ? Integer(0) : binom(m + l, l);
  out.h_top = m <= -l - 1 ? binom(-m - 1, l) : Integer(0);
  return out;
}

Integer h0_blowup(std::int64_t e, const Integer& a, const Integer& b, const Integer& c) {
  if (c < 0 || c > 1) {
    throw ScopeError("h0_blowup: only exceptional multiplicity c in {0,1} is supported (got " +
                     c.str() + ")");
  }
  const Integer base = h0_fe(e, a, b);
  if (c == 0) return base;
  // A generic point imposes one linear condition.
  return base > 0 ? Integer(base - 1) : Integer(0);
}

Integer h0(const Surface& s, const DivisorClass& D) {
  require_on(s, D);
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return h0_p2(D[0]);
    case SurfaceKind::Hirzebruch: return h0_fe(s.e(), D[0], D[1]);
    case SurfaceKind::BlowupHirzebruch: return h0_blowup(s.e(), D[0], D[1], -D[2]);
  }
  return 0;
}

CohomologyTable cohomology(const Surface& s, const DivisorClass& D) {
  require_on(s, D);
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return cohomology_p2(D[0]);
    case SurfaceKind::Hirzebruch: return cohomology_hirzebruch(s.e(), D[0], D[1]);
    case SurfaceKind::BlowupHirzebruch: break;
  }
  throw ScopeError("h^1 and h^2 are not computed on blowups");
}

Integer linear_system_dim(const Surface& s, const DivisorClass& L) {
  const Integer sections = h0(s, L);
  if (sections == 0) {
    throw std::invalid_argument("class " + format_class(s, L) + " is not effective on " + s.name());
  }
  return sections - 1;
}

}  // namespace ratsurf
