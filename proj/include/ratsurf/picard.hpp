#pragma once

// Picard-lattice arithmetic on the supported rational surfaces: the projective
// plane, Hirzebruch surfaces F_e and the blowup of F_e at one generic point.
//
// Every supported surface has chi(O_X) = 1. All quantities are exact.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ratsurf/integer.hpp"

namespace ratsurf {

enum class SurfaceKind { ProjectivePlane, Hirzebruch, BlowupHirzebruch };

class DivisorClass;

class Surface {
 public:
  static Surface projective_plane();
  static Surface hirzebruch(std::int64_t e);
  static Surface blowup_hirzebruch(std::int64_t e);

  SurfaceKind kind() const { return kind_; }
  /// Degree of the ruling twist; 0 for the plane.
  std::int64_t e() const { return e_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  /// Intersection number of generators i and j.
  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }

  /// Short identifier: "p2", "f<e>", "blowup-f<e>".
  std::string name() const;
  /// Inverse of name(); throws ParseError.
  static Surface parse(std::string_view text);

  DivisorClass zero() const;
  /// The i-th basis generator as a class.
  DivisorClass generator(std::size_t i) const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Surface(SurfaceKind kind, std::int64_t e, std::vector<std::string> basis,
          std::vector<std::int64_t> gram);

  SurfaceKind kind_;
  std::int64_t e_ = 0;
  std::vector<std::string> basis_;
  std::vector<std::int64_t> gram_;
};

/// Integer coefficient vector in a surface's Picard basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<long long> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a);
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  /// Lexicographic on the coefficient vector.
  friend auto operator<=>(const DivisorClass& a, const DivisorClass& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  std::vector<Integer> coeffs_;
};

/// Throws std::invalid_argument unless d has S's basis length.
void require_on(const Surface& s, const DivisorClass& d);

/// Parses "dH", "aG+bF", "aG+bF-cE" (any term order, unit coefficients and
/// zero terms may be omitted, "0" is the zero class).
DivisorClass parse_class(const Surface& s, std::string_view text);
/// Canonical printing: basis order, zero terms omitted, unit coefficients bare.
std::string format_class(const Surface& s, const DivisorClass& d);

/// (rank, c1, chi) in the Grothendieck group, enough for the Euler pairing.
struct SheafClass {
  Integer rank;
  DivisorClass c1;
  Integer chi;
};

/// u = (0, L, 0): a pure one-dimensional sheaf supported on |L| with chi = 0.
SheafClass support_class(const Surface& s, const DivisorClass& L);
/// c^r_n = r[O_X] - n[O_pt]: rank r, trivial c1, chi = r - n.
SheafClass rank_class(const Surface& s, const Integer& r, const Integer& n);

Integer intersect(const Surface& s, const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const Surface& s);
/// 1 + L.(L+K)/2.
Integer arithmetic_genus(const Surface& s, const DivisorClass& L);
/// Riemann-Roch: 1 + D.(D-K)/2.
Integer euler_char(const Surface& s, const DivisorClass& D);
/// chi(u (x) c) for a rank-0 class u; zero exactly when u and c are orthogonal.
Integer euler_pairing(const Surface& s, const SheafClass& u, const SheafClass& c);
/// Dimension L.L + 1 of the stable locus of sheaves supported on |L|.
Integer moduli_dimension(const Surface& s, const DivisorClass& L);

}  // namespace ratsurf
