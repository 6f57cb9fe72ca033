// ratsurf: intersection numbers, cohomology, linear-system conditions and
// theta generating functions on rational surfaces.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 parse/usage error,
// 3 unsupported branch, 4 enumeration or truncation cap exceeded.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ratsurf/report.hpp"

int main(int argc, char** argv) {
  using namespace ratsurf;

  CLI::App app{"Exact intersection theory and theta generating functions on rational surfaces"};
  app.require_subcommand(0, 1);

  ReportConfig cfg;
  std::string checks;
  std::string polarization;
  std::string format = "text";

  app.add_option("--surface", cfg.surface, "p2, f<e> or blowup-f<e>")->required();
  app.add_option("--class", cfg.divisor, "divisor class, e.g. 3H, 2G+4F, 2F-E")->required();
  app.add_option("--r", cfg.r, "power r of the theta bundle")->check(CLI::PositiveNumber);
  app.add_option("--trunc", cfg.trunc, "last series coefficient to print (cap 200, "
                                       "override with RATSURF_MAX_TRUNC)");
  app.add_option("--checks", checks,
                 "comma list of conditions,zseries,invariants,gtsec,dualizing (or all)");
  app.add_option("--ample", polarization, "very ample class for condition A1");
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  const std::map<std::string, ReportMode> modes = {
      {"genus", ReportMode::Genus},         {"cohom", ReportMode::Cohom},
      {"conditions", ReportMode::Conditions}, {"zseries", ReportMode::Zseries},
      {"report", ReportMode::Report}};
  std::map<std::string, CLI::App*> subcommands;
  for (const auto& [name, mode] : modes) {
    subcommands[name] = app.add_subcommand(name)->fallthrough();
  }
  subcommands["genus"]->description("genus, intersection numbers and dim |L|");
  subcommands["cohom"]->description("h0, h1, h2 and chi of O(L)");
  subcommands["conditions"]->description("conditions A1, A2, A3 on |L|");
  subcommands["zseries"]->description("Z^r(t) expansion");
  subcommands["report"]->description("series plus the requested checks (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, sub] : subcommands) {
    if (sub->parsed()) cfg.mode = modes.at(name);
  }
  cfg.format = format == "json" ? ReportFormat::Json
               : format == "csv" ? ReportFormat::Csv
                                 : ReportFormat::Text;
  if (!polarization.empty()) cfg.polarization = polarization;

  try {
    cfg.checks = parse_checks(checks);
    const Report report = run_report(cfg);
    std::cout << render(report, cfg.format);
    const int code = exit_code_for(report);
    if (code != 0) {
      for (const auto& c : report.checks) {
        if (!c.pass) {
          std::cerr << "ratsurf: check " << c.name << " failed: " << c.witness << "\n";
          break;
        }
      }
    }
    return code;
  } catch (const UnsupportedBranch& e) {
    std::cerr << "ratsurf: unsupported branch: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "ratsurf: cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "ratsurf: " << e.what() << "\n";
    return 2;
  }
}
