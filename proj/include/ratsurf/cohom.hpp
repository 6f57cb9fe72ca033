#pragma once

#include <cstdint>

#include "ratsurf/integer.hpp"
#include "ratsurf/picard.hpp"

namespace ratsurf {

/// h^0, h^1, h^2 and chi of a line bundle on a surface.
struct CohomologyTable {
  Integer h0;
  Integer h1;
  Integer h2;
  Integer chi;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// O(dH) on the projective plane.
CohomologyTable cohomology_p2(const Integer& d);

/// O(aG + bF) on F_e, G the negative section.
CohomologyTable cohomology_hirzebruch(std::int64_t e, const Integer& a, const Integer& b);

/// Only the two possibly nonzero groups of O(m) on P^l.
struct ProjectiveSpaceCohomology {
  Integer h0;
  Integer h_top;
};

/// Intermediate cohomology of O(m) on P^l is always zero.
ProjectiveSpaceCohomology cohomology_projective_space(std::int64_t l, const Integer& m);

/// h^0(aG + bF - cE) on the blowup of F_e at a generic point, c in {0, 1}.
Integer h0_blowup(std::int64_t e, const Integer& a, const Integer& b, const Integer& c);

/// h^0 of a class on any supported surface.
Integer h0(const Surface& s, const DivisorClass& D);

/// Full table on P^2 or F_e. Blowups only carry h^0 and throw ScopeError here.
CohomologyTable cohomology(const Surface& s, const DivisorClass& D);

/// dim |L| = h^0(L) - 1; throws std::invalid_argument for non-effective L.
Integer linear_system_dim(const Surface& s, const DivisorClass& L);

}  // namespace ratsurf
