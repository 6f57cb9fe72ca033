#include "ratsurf/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ratsurf {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kKnownChecks = {"conditions", "zseries", "invariants", "gtsec",
                                            "dualizing"};

std::string pow_string(std::int64_t base, const Integer& exponent) {
  return std::to_string(base) + "^" + exponent.str();
}

Integer ipow(std::int64_t base, std::int64_t exponent) {
  Integer acc = 1;
  for (std::int64_t i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

// Integers that fit in int64 become JSON numbers; larger ones become decimal strings.
ordered_json to_json(const Integer& v) {
  if (v <= Integer(INT64_MAX) && v >= Integer(INT64_MIN)) return static_cast<std::int64_t>(v);
  return v.str();
}

void add_condition_checks(const Surface& s, const DivisorClass& L, const ReportConfig& cfg,
                          Report& rep) {
  const DivisorClass H =
      cfg.polarization ? parse_class(s, *cfg.polarization) : default_polarization(s);
  const std::vector<ConditionReport> reports = {check_A1(s, L, H), check_A2(s, L), check_A3(s, L)};
  for (const auto& cr : reports) {
    CheckResult c;
    c.name = to_string(cr.condition);
    c.pass = cr.passed;
    c.tag = cr.proxy ? "numeric proxy" : "exact";
    if (cr.witness) {
      c.witness = format_witness(s, *cr.witness);
    } else if (cr.condition == Condition::A1) {
      c.witness = "H = " + format_class(s, H);
    }
    rep.checks.push_back(std::move(c));
  }
}

void add_invariant_checks(const ThetaContext& ctx, const ReportConfig& cfg, Report& rep) {
  const Surface& s = ctx.surface;
  const DivisorClass& L = ctx.L;
  const std::int64_t r = cfg.r;
  const std::size_t N = cfg.trunc;
  const GradedBundle gb = pushforward_decomposition(ctx, r);
  const std::string tag = provenance(ctx, r);

  {
    CheckResult c{"rank", false, "", tag};
    const Integer got = rank(gb);
    Integer expected = 1;
    std::string expected_text = "1";
    if (r > 1 && (ctx.branch == Branch::GenusOne || ctx.branch == Branch::GenusTwo)) {
      const auto g = to_int64(ctx.genus, "genus");
      expected = ipow(r, g);
      expected_text = pow_string(r, ctx.genus);
    }
    c.pass = got == expected;
    c.witness = got.str() + (c.pass ? " = " : " != ") + expected_text;
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"decomposition_vs_closed_form", false, "", tag};
    const auto by_parts = z_from_decomposition(gb, ctx.dim, N);
    const auto closed = z_series(ctx, r, N);
    c.pass = by_parts == closed;
    c.witness = "n <= " + std::to_string(N);
    for (std::size_t n = 0; n <= N && !c.pass; ++n) {
      if (by_parts.coeffs[n] != closed.coeffs[n]) {
        c.witness = "n = " + std::to_string(n) + ": " + by_parts.coeffs[n].str() +
                    " != " + closed.coeffs[n].str();
        break;
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"no_higher_cohomology", true, "n <= " + std::to_string(N), tag};
    for (std::size_t n = 0; n <= N; ++n) {
      const auto nn = static_cast<std::int64_t>(n);
      const Integer h = h0_lambda(ctx, r, nn);
      const Integer x = euler_char_lambda(ctx, r, nn);
      if (h != x || !higher_cohomology_vanishes(gb, ctx.dim, nn)) {
        c.pass = false;
        c.witness = "n = " + std::to_string(n) + ": h0 = " + h.str() + ", chi = " + x.str();
        break;
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"dimension_identity", false, "", "L.L + 1 = l + g_L"};
    const Integer lhs = moduli_dimension(s, L);
    const Integer l = ctx.dim;
    bool vanishing = false;
    if (s.kind() != SurfaceKind::BlowupHirzebruch) {
      const CohomologyTable t = cohomology(s, L);
      vanishing = t.h1 == 0 && t.h2 == 0;
    }
    if (vanishing) {
      c.pass = lhs == l + ctx.genus;
      c.witness = lhs.str() + (c.pass ? " = " : " != ") + l.str() + " + " + ctx.genus.str();
    } else {
      // Without vanishing only the Riemann-Roch form chi(L) - 1 + g_L is forced.
      const Integer rr = euler_char(s, L) - 1 + ctx.genus;
      c.pass = lhs == rr;
      c.tag = "L.L + 1 = chi(L) - 1 + g_L";
      c.witness = lhs.str() + (c.pass ? " = " : " != ") + rr.str() + " (h1/h2 not known to vanish)";
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"euler_pairing", true, "chi(u (x) c^r_n) = 0 for n <= " + std::to_string(N),
                  "u = (0, L, 0), c^r_n = (r, 0, r - n)"};
    const SheafClass u = support_class(s, L);
    for (std::size_t n = 0; n <= N; ++n) {
      const Integer p = euler_pairing(s, u, rank_class(s, r, static_cast<std::int64_t>(n)));
      if (p != 0) {
        c.pass = false;
        c.witness = "n = " + std::to_string(n) + ": " + p.str();
        break;
      }
    }
    rep.checks.push_back(std::move(c));
  }
  if (ctx.branch == Branch::GenusOne) {
    CheckResult c{"sequence_additivity", sequence_additivity_g1(r), "", tag};
    c.witness = "decomposition(" + std::to_string(r + 1) + ") = decomposition(" +
                std::to_string(r) + ") + O(" + std::to_string(theta_restriction_twist(r + 1)) + ")";
    rep.checks.push_back(std::move(c));
  }
  if (ctx.branch == Branch::GenusTwo && r >= 2) {
    CheckResult c{"recursion_g2", recursion_check_g2(r), "", tag};
    c.witness = "decomposition(" + std::to_string(r + 1) + ") = decomposition(" +
                std::to_string(r) + ") + O(" + std::to_string(-(r + 1)) + ")^" +
                std::to_string(r + 2) + " + O(" + std::to_string(-(r + 2)) + ")^" +
                std::to_string(r - 1);
    rep.checks.push_back(std::move(c));
  }
}

void add_gtsec_check(const Surface& s, const ReportConfig& cfg, Report& rep) {
  if (s.kind() != SurfaceKind::Hirzebruch || s.e() > 1) {
    throw std::invalid_argument("the gtsec check needs surface f0 or f1");
  }
  if (cfg.r < 2) throw std::invalid_argument("the gtsec check needs r >= 2");
  const auto res = verify_gtsec_cohomology(s.e(), cfg.r);
  CheckResult c;
  c.name = "gtsec";
  c.pass = res.ok;
  c.tag = "L = 2G+" + std::to_string(s.e() + 3) + "F: h0(r(L+K)) = r+1, h1(r(L+K)-L) = r-2";
  c.witness = "h0(r(L+K)) = " + res.h0_pos.str() + ", h1(r(L+K)-L) = " + res.h1_neg.str();
  rep.checks.push_back(std::move(c));
}

void add_dualizing_check(const Surface& s, const DivisorClass& L, Report& rep) {
  const Integer twist = dualizing_twist(s, L);
  const Integer g = arithmetic_genus(s, L);
  const Integer ll = intersect(s, L, L);
  CheckResult c;
  c.name = "dualizing";
  // Adjunction: 2g - 2 = L.L + L.K. The twist pulls back from |L|, so its
  // restriction to any fiber of the support map has degree 0.
  c.pass = twist == 2 * g - 2 - ll;
  c.tag = "omega_M = pi^* O(1)^{L.K}; trivial on fibers";
  c.witness = "L.K = " + twist.str() + ", 2g-2-L.L = " + Integer(2 * g - 2 - ll).str();
  rep.checks.push_back(std::move(c));
}

}  // namespace

std::size_t truncation_cap() {
  if (const char* env = std::getenv("RATSURF_MAX_TRUNC")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultTruncCap;
}

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(kKnownChecks.begin(), kKnownChecks.end());
      continue;
    }
    if (!kKnownChecks.contains(item)) throw ParseError("unknown check '" + item + "'");
    out.insert(item);
  }
  return out;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int exit_code_for(const Report& report) { return report.passed() ? 0 : 1; }

Report run_report(const ReportConfig& cfg) {
  if (cfg.r < 1) throw std::invalid_argument("r must be positive");
  if (cfg.trunc > truncation_cap()) {
    throw CapExceeded("truncation " + std::to_string(cfg.trunc) + " exceeds the cap of " +
                      std::to_string(truncation_cap()) + " (set RATSURF_MAX_TRUNC to raise it)");
  }
  const Surface s = Surface::parse(cfg.surface);
  const DivisorClass L = parse_class(s, cfg.divisor);

  Report rep;
  rep.surface = s.name();
  rep.divisor = format_class(s, L);
  rep.r = cfg.r;
  rep.trunc = cfg.trunc;
  rep.genus = arithmetic_genus(s, L);
  rep.self_intersection = intersect(s, L, L);
  rep.canonical_degree = dualizing_twist(s, L);
  rep.euler_characteristic = euler_char(s, L);
  // Blowup h0 is scoped to exceptional multiplicity 0 or 1.
  if (s.kind() != SurfaceKind::BlowupHirzebruch) {
    rep.cohomology = cohomology(s, L);
    rep.h0 = rep.cohomology->h0;
  } else if (L[2] <= 0 && L[2] >= -1) {
    rep.h0 = h0(s, L);
  }
  if (rep.h0 && *rep.h0 > 0) rep.dim = *rep.h0 - 1;

  std::set<std::string> checks;
  switch (cfg.mode) {
    case ReportMode::Genus:
    case ReportMode::Cohom:
      return rep;
    case ReportMode::Conditions: checks = {"conditions"}; break;
    case ReportMode::Zseries: checks = {"zseries"}; break;
    case ReportMode::Report:
      checks = cfg.checks.empty() ? std::set<std::string>{"zseries", "invariants"} : cfg.checks;
      break;
  }

  if (!rep.dim) {
    throw std::invalid_argument("class " + rep.divisor + " is not effective on " + rep.surface);
  }
  if (L.is_zero()) throw std::invalid_argument("the zero class has an empty linear system");

  const ThetaContext ctx = make_context(s, L);
  rep.branch = to_string(ctx.branch);

  if (checks.contains("conditions")) add_condition_checks(s, L, cfg, rep);

  if (checks.contains("zseries") || checks.contains("invariants")) {
    require_supported(ctx, cfg.r);
    rep.numerator = z_numerator(ctx, cfg.r).to_string();
    rep.denominator = "(1 - t)^" + std::to_string(ctx.dim + 1);
    rep.decomposition = pushforward_decomposition(ctx, cfg.r).to_string();
    rep.series_tag = provenance(ctx, cfg.r);
    const auto series = z_series(ctx, cfg.r, cfg.trunc);
    for (std::size_t n = 0; n <= cfg.trunc; ++n) {
      const auto nn = static_cast<std::int64_t>(n);
      rep.series.push_back({nn, series.coeffs[n], euler_char_lambda(ctx, cfg.r, nn)});
    }
  }
  if (checks.contains("zseries")) {
    CheckResult c{"zseries", false, "", provenance(ctx, cfg.r)};
    const auto by_parts =
        z_from_decomposition(pushforward_decomposition(ctx, cfg.r), ctx.dim, cfg.trunc);
    c.pass = by_parts == z_series(ctx, cfg.r, cfg.trunc);
    c.witness = c.pass ? "closed form = decomposition sum for n <= " + std::to_string(cfg.trunc)
                       : "closed form and decomposition sum differ";
    rep.checks.push_back(std::move(c));
  }
  if (checks.contains("invariants")) add_invariant_checks(ctx, cfg, rep);
  if (checks.contains("gtsec")) add_gtsec_check(s, cfg, rep);
  if (checks.contains("dualizing")) add_dualizing_check(s, L, rep);
  return rep;
}

namespace {

ordered_json to_json(const Report& rep) {
  ordered_json context;
  context["surface"] = rep.surface;
  context["class"] = rep.divisor;
  context["r"] = rep.r;
  context["trunc"] = rep.trunc;
  context["genus"] = to_json(rep.genus);
  context["self_intersection"] = to_json(rep.self_intersection);
  context["canonical_degree"] = to_json(rep.canonical_degree);
  context["euler_characteristic"] = to_json(rep.euler_characteristic);
  context["dim"] = rep.dim ? to_json(*rep.dim) : ordered_json(nullptr);
  if (rep.cohomology) {
    context["cohomology"] = {{"h0", to_json(rep.cohomology->h0)},
                             {"h1", to_json(rep.cohomology->h1)},
                             {"h2", to_json(rep.cohomology->h2)},
                             {"chi", to_json(rep.cohomology->chi)}};
  } else if (rep.h0) {
    context["cohomology"] = {{"h0", to_json(*rep.h0)}};
  }

  ordered_json j;
  j["context"] = std::move(context);
  j["branch"] = rep.branch;
  if (rep.numerator) {
    j["generating_function"] = {{"numerator", *rep.numerator},
                                {"denominator", *rep.denominator},
                                {"decomposition", *rep.decomposition},
                                {"tag", rep.series_tag}};
  }
  j["series"] = ordered_json::array();
  for (const auto& row : rep.series) {
    j["series"].push_back({{"n", row.n}, {"h0", to_json(row.h0)}, {"chi", to_json(row.chi)}});
  }
  j["checks"] = ordered_json::array();
  for (const auto& c : rep.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"tag", c.tag}});
  }
  j["pass"] = rep.passed();
  return j;
}

std::string render_text(const Report& rep) {
  std::ostringstream out;
  out << "surface: " << rep.surface << "\n";
  out << "class: " << rep.divisor << "\n";
  out << "r: " << rep.r << "\n";
  out << "genus: " << rep.genus << "\n";
  out << "L.L: " << rep.self_intersection << "\n";
  out << "L.K: " << rep.canonical_degree << "\n";
  out << "chi(L): " << rep.euler_characteristic << "\n";
  if (rep.cohomology) {
    out << "h0/h1/h2: " << rep.cohomology->h0 << " " << rep.cohomology->h1 << " "
        << rep.cohomology->h2 << "\n";
  } else if (rep.h0) {
    out << "h0: " << *rep.h0 << "\n";
  }
  out << "dim |L|: " << (rep.dim ? rep.dim->str() : std::string("- (not effective)")) << "\n";
  out << "branch: " << rep.branch << "\n";
  if (rep.numerator) {
    out << "Z^" << rep.r << "(t) = (" << *rep.numerator << ") / " << *rep.denominator << "\n";
    out << "pi_* Theta^" << rep.r << " = " << *rep.decomposition << "\n";
    out << "source: " << rep.series_tag << "\n";
  }
  if (!rep.series.empty()) {
    std::size_t width = 2;
    for (const auto& row : rep.series) width = std::max(width, row.h0.str().size());
    out << std::setw(4) << "n" << "  " << std::setw(static_cast<int>(width)) << "h0" << "  "
        << "chi" << "\n";
    for (const auto& row : rep.series) {
      out << std::setw(4) << row.n << "  " << std::setw(static_cast<int>(width)) << row.h0.str()
          << "  " << row.chi.str() << "\n";
    }
  }
  for (const auto& c : rep.checks) {
    out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.witness.empty()) out << " (" << c.witness << ")";
    if (!c.tag.empty()) out << " [" << c.tag << "]";
    out << "\n";
  }
  if (!rep.checks.empty()) out << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_csv(const Report& rep) {
  std::ostringstream out;
  out << "n,h0,chi\n";
  for (const auto& row : rep.series) out << row.n << ',' << row.h0 << ',' << row.chi << '\n';
  return out.str();
}

}  // namespace

std::string render(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return render_text(report);
    case ReportFormat::Json: return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(report);
  }
  return {};
}

}  // namespace ratsurf
