#include "ratsurf/picard.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ratsurf {

Surface::Surface(SurfaceKind kind, std::int64_t e, std::vector<std::string> basis,
                 std::vector<std::int64_t> gram)
    : kind_(kind), e_(e), basis_(std::move(basis)), gram_(std::move(gram)) {}

Surface Surface::projective_plane() {
  return Surface(SurfaceKind::ProjectivePlane, 0, {"H"}, {1});
}

Surface Surface::hirzebruch(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch surface needs e >= 0");
  return Surface(SurfaceKind::Hirzebruch, e, {"G", "F"}, {-e, 1, 1, 0});
}

Surface Surface::blowup_hirzebruch(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch surface needs e >= 0");
  // Pulled-back section and fiber keep their pairings; E is orthogonal to both.
  return Surface(SurfaceKind::BlowupHirzebruch, e, {"G", "F", "E"},
                 {-e, 1, 0,
                  1, 0, 0,
                  0, 0, -1});
}

std::string Surface::name() const {
  switch (kind_) {
    case SurfaceKind::ProjectivePlane: return "p2";
    case SurfaceKind::Hirzebruch: return "f" + std::to_string(e_);
    case SurfaceKind::BlowupHirzebruch: return "blowup-f" + std::to_string(e_);
  }
  return {};
}

namespace {

std::string lowercase(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::int64_t parse_e(std::string_view digits, std::string_view whole) {
  std::int64_t e = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || e < 0) {
    throw ParseError("unknown surface '" + std::string(whole) + "'");
  }
  return e;
}

}  // namespace

Surface Surface::parse(std::string_view text) {
  const std::string t = lowercase(text);
  if (t == "p2") return projective_plane();
  if (t.starts_with("blowup-f")) return blowup_hirzebruch(parse_e(std::string_view(t).substr(8), text));
  if (t.starts_with("f")) return hirzebruch(parse_e(std::string_view(t).substr(1), text));
  throw ParseError("unknown surface '" + std::string(text) +
                   "' (expected p2, f<e> or blowup-f<e>)");
}

DivisorClass Surface::zero() const { return DivisorClass(std::vector<Integer>(rank())); }

DivisorClass Surface::generator(std::size_t i) const {
  DivisorClass d = zero();
  d[i] = 1;
  return d;
}

DivisorClass::DivisorClass(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.size() != size()) throw std::invalid_argument("class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.size() != size()) throw std::invalid_argument("class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DivisorClass operator*(const Integer& k, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

void require_on(const Surface& s, const DivisorClass& d) {
  if (d.size() != s.rank()) {
    throw std::invalid_argument("class has " + std::to_string(d.size()) +
                                " coefficients but surface " + s.name() + " has rank " +
                                std::to_string(s.rank()));
  }
}

DivisorClass parse_class(const Surface& s, std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw ParseError("empty class string");
  DivisorClass d = s.zero();
  if (t == "0") return d;

  std::vector<bool> seen(s.rank(), false);
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in class '" + std::string(text) + "'");
    }
    std::size_t digits_begin = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    Integer coeff = 1;
    if (pos > digits_begin) coeff = Integer(t.substr(digits_begin, pos - digits_begin));
    if (pos >= t.size()) {
      throw ParseError("missing generator symbol in class '" + std::string(text) + "'");
    }
    const std::string symbol(1, static_cast<char>(std::toupper(static_cast<unsigned char>(t[pos]))));
    ++pos;
    auto it = std::find(s.basis().begin(), s.basis().end(), symbol);
    if (it == s.basis().end()) {
      throw ParseError("generator '" + symbol + "' is not in the basis of " + s.name());
    }
    const auto idx = static_cast<std::size_t>(it - s.basis().begin());
    if (seen[idx]) throw ParseError("generator '" + symbol + "' repeated in '" + std::string(text) + "'");
    seen[idx] = true;
    d[idx] = negative ? Integer(-coeff) : coeff;
  }
  return d;
}

std::string format_class(const Surface& s, const DivisorClass& d) {
  require_on(s, d);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Integer& c = d[i];
    if (c == 0) continue;
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    const Integer mag = abs(c);
    if (mag != 1) out << mag;
    out << s.basis()[i];
    first = false;
  }
  return first ? "0" : out.str();
}

SheafClass support_class(const Surface& s, const DivisorClass& L) {
  require_on(s, L);
  return {0, L, 0};
}

SheafClass rank_class(const Surface& s, const Integer& r, const Integer& n) {
  // chi(O_X) = 1 on every supported surface.
  return {r, s.zero(), r - n};
}

Integer intersect(const Surface& s, const DivisorClass& a, const DivisorClass& b) {
  require_on(s, a);
  require_on(s, b);
  Integer total = 0;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s.rank(); ++j) {
      const std::int64_t g = s.gram(i, j);
      if (g != 0) total += a[i] * b[j] * g;
    }
  }
  return total;
}

DivisorClass canonical_class(const Surface& s) {
  switch (s.kind()) {
    case SurfaceKind::ProjectivePlane:
      return DivisorClass{-3};
    case SurfaceKind::Hirzebruch:
      return DivisorClass{-2, -(s.e() + 2)};
    case SurfaceKind::BlowupHirzebruch:
      return DivisorClass{-2, -(s.e() + 2), 1};
  }
  return {};
}

Integer arithmetic_genus(const Surface& s, const DivisorClass& L) {
  const Integer twice = intersect(s, L, L + canonical_class(s));
  // L.(L+K) is even on any smooth surface.
  return 1 + twice / 2;
}

Integer euler_char(const Surface& s, const DivisorClass& D) {
  return 1 + intersect(s, D, D - canonical_class(s)) / 2;
}

Integer euler_pairing(const Surface& s, const SheafClass& u, const SheafClass& c) {
  if (u.rank != 0) {
    throw ScopeError("euler_pairing is implemented for rank-0 (one-dimensional) u only");
  }
  return c.rank * u.chi + intersect(s, c.c1, u.c1);
}

Integer moduli_dimension(const Surface& s, const DivisorClass& L) {
  return intersect(s, L, L) + 1;
}

}  // namespace ratsurf
