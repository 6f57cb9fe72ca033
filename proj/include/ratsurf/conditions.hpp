#pragma once

// Effective-class enumeration and the numeric forms of the three conditions
// on |L| (A1: negativity against K+H, A2: dimension inequality over
// decompositions, A3: codimension of non-integral curves) used to place a
// class on one of the supported genus branches.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratsurf/picard.hpp"

namespace ratsurf {

/// Coefficient-sum cap for decomposition enumeration.
inline constexpr std::int64_t kDecompositionCap = 24;

/// Canonical order on classes: by coefficient sum, then reverse lexicographic.
bool canonical_less(const DivisorClass& a, const DivisorClass& b);

/// A multiset of nonzero effective classes summing to L, in canonical order.
struct Decomposition {
  std::vector<DivisorClass> parts;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class Condition { A1, A2, A3 };
std::string to_string(Condition c);

using Witness = std::variant<DivisorClass, Decomposition>;

struct ConditionReport {
  Condition condition = Condition::A1;
  bool passed = false;
  /// Present whenever passed is false.
  std::optional<Witness> witness;
  std::vector<std::string> details;
  /// True when the check is a numeric stand-in for a geometric statement.
  bool proxy = false;
};

std::string format_witness(const Surface& s, const Witness& w);

bool is_effective(const Surface& s, const DivisorClass& D);

/// All D with 0 < D <= L, in canonical order. On blowups only classes whose
/// exceptional multiplicity stays in {0, 1} (for D and L - D) are listed.
std::vector<DivisorClass> enumerate_effective_below(const Surface& s, const DivisorClass& L);

/// All multisets of at least two nonzero effective classes summing to L.
/// Throws CapExceeded past kDecompositionCap.
std::vector<Decomposition> enumerate_decompositions(const Surface& s, const DivisorClass& L);

/// Toric criterion: P^2 d >= 1, F_e a >= 1 and b >= a e + 1.
bool is_very_ample(const Surface& s, const DivisorClass& H);

ConditionReport check_A1(const Surface& s, const DivisorClass& L, const DivisorClass& H);
ConditionReport check_A2(const Surface& s, const DivisorClass& L);
ConditionReport check_A3(const Surface& s, const DivisorClass& L);

/// Very ample class used when none is supplied: H on P^2, G + (e+1)F on F_e.
DivisorClass default_polarization(const Surface& s);

enum class Branch { GenusNonPositive, PositiveGenusGeneral, GenusOne, GenusTwo, Unsupported };
std::string to_string(Branch b);

/// Which closed form (if any) governs the theta pushforward on |L|.
Branch classify_branch(const Surface& s, const DivisorClass& L);

/// P^2 with L = dH, d >= 3.
bool is_plane_positive_genus_family(const Surface& s, const DivisorClass& L);
/// F_e, e in {0,1}, L = 2G + nF with n > max(1, 2e).
bool is_ruled_positive_genus_family(const Surface& s, const DivisorClass& L);
/// F_e, e in {0,1}, L = 2G + (e+3)F.
bool is_genus_two_family(const Surface& s, const DivisorClass& L);

}  // namespace ratsurf
