#include "ratsurf/conditions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ratsurf/cohom.hpp"

namespace ratsurf {

namespace {

constexpr std::int64_t kBoxCap = 2'000'000;

Integer coefficient_sum(const DivisorClass& d) {
  return std::accumulate(d.coeffs().begin(), d.coeffs().end(), Integer(0));
}

Integer abs_coefficient_sum(const DivisorClass& d) {
  Integer total = 0;
  for (const auto& c : d.coeffs()) total += abs(c);
  return total;
}

void require_effective(const Surface& s, const DivisorClass& L) {
  if (!is_effective(s, L)) {
    throw std::invalid_argument("class " + format_class(s, L) + " is not effective on " + s.name());
  }
}

std::string str(const Integer& v) { return v.str(); }

}  // namespace

bool canonical_less(const DivisorClass& a, const DivisorClass& b) {
  const Integer sa = coefficient_sum(a);
  const Integer sb = coefficient_sum(b);
  if (sa != sb) return sa < sb;
  return b < a;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::A1: return "A1";
    case Condition::A2: return "A2";
    case Condition::A3: return "A3";
  }
  return {};
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::GenusNonPositive: return "GenusNonPositive";
    case Branch::PositiveGenusGeneral: return "PositiveGenusGeneral";
    case Branch::GenusOne: return "GenusOne";
    case Branch::GenusTwo: return "GenusTwo";
    case Branch::Unsupported: return "Unsupported";
  }
  return {};
}

std::string format_witness(const Surface& s, const Witness& w) {
  if (const auto* d = std::get_if<DivisorClass>(&w)) return format_class(s, *d);
  const auto& parts = std::get<Decomposition>(w).parts;
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += format_class(s, parts[i]);
  }
  return out + "}";
}

bool is_effective(const Surface& s, const DivisorClass& D) {
  require_on(s, D);
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return D[0] >= 0;
    case SurfaceKind::Hirzebruch: return D[0] >= 0 && D[1] >= 0;
    case SurfaceKind::BlowupHirzebruch: return h0(s, D) > 0;
  }
  return false;
}

std::vector<DivisorClass> enumerate_effective_below(const Surface& s, const DivisorClass& L) {
  require_effective(s, L);
  // Every effective class here has nonnegative G/F (or H) coefficients bounded by L's.
  std::vector<std::int64_t> hi;
  for (std::size_t i = 0; i < std::min<std::size_t>(s.rank(), 2); ++i) {
    hi.push_back(to_int64(L[i], "enumeration bound"));
  }
  std::vector<std::int64_t> exceptional = {0};
  if (s.kind() == SurfaceKind::BlowupHirzebruch) {
    // E-coefficients of D and L - D both in {0, -1}.
    exceptional.clear();
    const auto le = to_int64(L[2], "exceptional coefficient");
    for (std::int64_t x : {std::int64_t{0}, std::int64_t{-1}}) {
      if (le - x == 0 || le - x == -1) exceptional.push_back(x);
    }
  }
  Integer box = exceptional.size();
  for (auto h : hi) box *= h + 1;
  if (box > kBoxCap) {
    throw CapExceeded("effective box for " + format_class(s, L) + " has " + box.str() +
                      " candidates (cap " + std::to_string(kBoxCap) + ")");
  }

  std::vector<DivisorClass> out;
  DivisorClass d = s.zero();
  const std::int64_t b_hi = hi.size() > 1 ? hi[1] : 0;
  for (std::int64_t a = 0; a <= hi[0]; ++a) {
    for (std::int64_t b = 0; b <= b_hi; ++b) {
      for (std::int64_t x : exceptional) {
        d[0] = a;
        if (s.rank() > 1) d[1] = b;
        if (s.rank() > 2) d[2] = x;
        if (d.is_zero()) continue;
        if (is_effective(s, d) && is_effective(s, L - d)) out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

struct DecompositionSearch {
  const std::vector<DivisorClass>& below;
  const std::map<DivisorClass, std::size_t>& index;
  std::vector<Decomposition>& out;
  std::vector<std::size_t> chosen;

  void run(const DivisorClass& remaining, std::size_t first) {
    for (std::size_t j = first; j < below.size(); ++j) {
      const DivisorClass& part = below[j];
      if (part == remaining) {
        if (chosen.empty()) continue;  // the trivial singleton {L}
        Decomposition dec;
        for (auto k : chosen) dec.parts.push_back(below[k]);
        dec.parts.push_back(part);
        out.push_back(std::move(dec));
        continue;
      }
      DivisorClass rest = remaining - part;
      // Anything left over must be a nonzero effective class below L.
      if (!index.contains(rest)) continue;
      chosen.push_back(j);
      run(rest, j);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const Surface& s, const DivisorClass& L) {
  require_effective(s, L);
  if (abs_coefficient_sum(L) > kDecompositionCap) {
    throw CapExceeded("decomposition enumeration for " + format_class(s, L) +
                      " exceeds the coefficient-sum cap of " + std::to_string(kDecompositionCap));
  }
  const auto below = enumerate_effective_below(s, L);
  std::map<DivisorClass, std::size_t> index;
  for (std::size_t i = 0; i < below.size(); ++i) index.emplace(below[i], i);
  std::vector<Decomposition> out;
  DecompositionSearch search{below, index, out, {}};
  search.run(L, 0);
  return out;
}

bool is_very_ample(const Surface& s, const DivisorClass& H) {
  require_on(s, H);
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return H[0] >= 1;
    case SurfaceKind::Hirzebruch: return H[0] >= 1 && H[1] >= H[0] * s.e() + 1;
    case SurfaceKind::BlowupHirzebruch: break;
  }
  throw ScopeError("very-ampleness is not decided on blowups");
}

DivisorClass default_polarization(const Surface& s) {
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane: return DivisorClass{1};
    case SurfaceKind::Hirzebruch: return DivisorClass{1, s.e() + 1};
    case SurfaceKind::BlowupHirzebruch: break;
  }
  throw ScopeError("no polarization is provided on blowups");
}

ConditionReport check_A1(const Surface& s, const DivisorClass& L, const DivisorClass& H) {
  if (s.kind() == SurfaceKind::BlowupHirzebruch) {
    throw ScopeError("condition A1 is not checked on blowups");
  }
  if (!is_very_ample(s, H)) {
    throw std::invalid_argument("polarization " + format_class(s, H) + " is not very ample");
  }
  ConditionReport rep;
  rep.condition = Condition::A1;
  rep.passed = true;
  const DivisorClass kh = canonical_class(s) + H;
  const bool exception_allowed = s.kind() == SurfaceKind::Hirzebruch && s.e() == 1;
  const DivisorClass g1 = s.rank() > 1 ? s.generator(0) : s.zero();
  const DivisorClass g2 = Integer(2) * g1;
  for (const auto& sub : enumerate_effective_below(s, L)) {
    const Integer pairing = intersect(s, sub, kh);
    const std::string lhs = format_class(s, sub) + ".(K+H) = " + str(pairing);
    if (pairing < 0) {
      rep.details.push_back(lhs + " < 0");
    } else if (exception_allowed && (sub == g1 || sub == g2)) {
      rep.details.push_back(lhs + " (allowed: multiple of the negative section on f1)");
    } else {
      rep.details.push_back(lhs + " >= 0 violates A1");
      rep.passed = false;
      if (!rep.witness) rep.witness = sub;
    }
  }
  return rep;
}

ConditionReport check_A2(const Surface& s, const DivisorClass& L) {
  require_effective(s, L);
  ConditionReport rep;
  rep.condition = Condition::A2;
  rep.passed = true;
  rep.proxy = true;

  // (i) genus <= 0 sub-classes contain no positive-genus sub-class.
  for (const auto& sub : enumerate_effective_below(s, L)) {
    if (arithmetic_genus(s, sub) > 0) continue;
    for (const auto& inner : enumerate_effective_below(s, sub)) {
      const Integer g = arithmetic_genus(s, inner);
      if (g > 0) {
        rep.details.push_back(format_class(s, sub) + " has genus <= 0 but contains " +
                              format_class(s, inner) + " of genus " + str(g));
        rep.passed = false;
        if (!rep.witness) rep.witness = sub;
        break;
      }
    }
  }

  // (ii) sum l_i + sum max(g_i, 0) + 2 <= l + g_L over all decompositions.
  const Integer bound = linear_system_dim(s, L) + arithmetic_genus(s, L);
  for (const auto& dec : enumerate_decompositions(s, L)) {
    Integer lhs = 2;
    for (const auto& part : dec.parts) {
      lhs += linear_system_dim(s, part);
      lhs += std::max(arithmetic_genus(s, part), Integer(0));
    }
    const bool ok = lhs <= bound;
    rep.details.push_back(format_witness(s, dec) + ": " + str(lhs) + (ok ? " <= " : " > ") +
                          str(bound));
    if (!ok) {
      rep.passed = false;
      if (!rep.witness) rep.witness = dec;
    }
  }
  return rep;
}

ConditionReport check_A3(const Surface& s, const DivisorClass& L) {
  require_effective(s, L);
  ConditionReport rep;
  rep.condition = Condition::A3;
  rep.passed = true;
  rep.proxy = true;
  auto fail = [&rep](Witness w) {
    rep.passed = false;
    if (!rep.witness) rep.witness = std::move(w);
  };

  const Integer l = linear_system_dim(s, L);
  const Integer g = arithmetic_genus(s, L);
  if (g < 1) {
    rep.details.push_back("g_L = " + str(g) + " < 1: no connected smooth curve of positive genus");
    fail(L);
  }

  // Base-point-freeness marker: a generic point imposes one condition, and L is nef on F_e.
  bool free = h0(s, L) >= 1;
  if (s.kind() == SurfaceKind::Hirzebruch) free = free && L[1] >= L[0] * s.e();
  rep.details.push_back(std::string("base-point-free marker: ") + (free ? "yes" : "no"));
  if (!free) fail(L);

  const auto below = enumerate_effective_below(s, L);
  for (const auto& first : below) {
    if (first == L) continue;
    const DivisorClass second = L - first;
    if (canonical_less(second, first)) continue;  // each unordered split once
    const Integer lhs = linear_system_dim(s, first) + linear_system_dim(s, second);
    const bool ok = lhs <= l - 2;
    rep.details.push_back("split {" + format_class(s, first) + ", " + format_class(s, second) +
                          "}: " + str(lhs) + (ok ? " <= " : " > ") + str(l - 2));
    if (!ok) fail(Decomposition{{first, second}});
  }

  for (const auto& base : below) {
    if (base == L) continue;
    // L = m * base for some m >= 2?
    Integer m = 0;
    bool multiple = true;
    for (std::size_t i = 0; i < L.size() && multiple; ++i) {
      if (base[i] == 0) {
        multiple = L[i] == 0;
      } else if (L[i] % base[i] != 0) {
        multiple = false;
      } else {
        const Integer q = L[i] / base[i];
        if (m == 0) m = q;
        multiple = q == m;
      }
    }
    if (!multiple || m < 2) continue;
    const Integer l0 = linear_system_dim(s, base);
    const bool ok = l0 <= l - 2;
    rep.details.push_back("multiple " + m.str() + "(" + format_class(s, base) + "): " + str(l0) +
                          (ok ? " <= " : " > ") + str(l - 2));
    if (!ok) fail(Decomposition{std::vector<DivisorClass>(static_cast<std::size_t>(m), base)});
  }
  return rep;
}

bool is_plane_positive_genus_family(const Surface& s, const DivisorClass& L) {
  return s.kind() == SurfaceKind::ProjectivePlane && L.size() == 1 && L[0] >= 3;
}

bool is_ruled_positive_genus_family(const Surface& s, const DivisorClass& L) {
  if (s.kind() != SurfaceKind::Hirzebruch || s.e() > 1 || L.size() != 2) return false;
  return L[0] == 2 && L[1] > std::max<std::int64_t>(1, 2 * s.e());
}

bool is_genus_two_family(const Surface& s, const DivisorClass& L) {
  if (s.kind() != SurfaceKind::Hirzebruch || s.e() > 1 || L.size() != 2) return false;
  return L[0] == 2 && L[1] == s.e() + 3;
}

Branch classify_branch(const Surface& s, const DivisorClass& L) {
  require_effective(s, L);
  if (L.is_zero()) throw std::invalid_argument("the zero class has an empty linear system");
  const auto below = enumerate_effective_below(s, L);
  const bool all_nonpositive = std::all_of(below.begin(), below.end(), [&](const DivisorClass& d) {
    return arithmetic_genus(s, d) <= 0;
  });
  if (all_nonpositive) return Branch::GenusNonPositive;
  if (is_genus_two_family(s, L)) return Branch::GenusTwo;
  if (is_plane_positive_genus_family(s, L) || is_ruled_positive_genus_family(s, L)) {
    return arithmetic_genus(s, L) == 1 ? Branch::GenusOne : Branch::PositiveGenusGeneral;
  }
  return Branch::Unsupported;
}

}  // namespace ratsurf
