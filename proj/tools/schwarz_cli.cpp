// schwarz: solve and verify a boundary value problem given as a JSON spec.

#include "schwarz/problem_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace schwarz;

enum Exit : int
{
   exit_pass = 0,
   exit_verify_fail = 1,
   exit_schema = 2,
   exit_admissibility = 3,
   exit_solver = 4
};

static int exit_for(ErrorKind k)
{
   switch (k)
   {
   case ErrorKind::admissibility:
   case ErrorKind::divergence_risk: return exit_admissibility;
   case ErrorKind::validation:
   case ErrorKind::config: return exit_schema;
   default: return exit_solver;
   }
}

static int run_solve(const std::string& spec, const std::string& out, std::optional<double> scale,
                     std::optional<int> level, const std::string& format)
{
   Problem p;
   try
   {
      p = parse_problem_file(spec);
   }
   catch (const SchemaError& e)
   {
      std::cerr << "schema error " << e.what() << "\n";
      return exit_schema;
   }
   catch (const SchwarzError& e)
   {
      std::cerr << "rejected: " << e.what() << "\n";
      return exit_for(e.kind());
   }
   if (scale)
      p.tolerance_scale = *scale;
   if (level)
      p.levels = *level;

   SchwarzSolution sol;
   ResidualReport report;
   try
   {
      sol = solve(p);
      VerifyConfig cfg;
      cfg.tol.scale = p.tolerance_scale;
      cfg.levels = p.levels;
      report = full_report(sol, cfg);
   }
   catch (const SchwarzError& e)
   {
      std::cerr << "solver error: " << e.what() << "\n";
      return e.kind() == ErrorKind::admissibility || e.kind() == ErrorKind::divergence_risk ? exit_admissibility
                                                                                              : exit_solver;
   }

   fs::create_directories(out);
   {
      std::ofstream os(fs::path(out) / "samples.csv");
      write_samples(os, sol);
   }
   if (format == "structured")
   {
      std::ofstream os(fs::path(out) / "report.json");
      os << report_json(p, report).dump(2) << "\n";
   }
   else
   {
      std::ofstream os(fs::path(out) / "report.txt");
      write_report_text(os, p, report);
   }
   {
      std::ofstream os(fs::path(out) / "summary.txt");
      write_summary(os, p, sol, report);
   }
   write_summary(std::cout, p, sol, report);
   return report.pass() ? exit_pass : exit_verify_fail;
}

int main(int argc, char** argv)
{
   CLI::App app{"Schwarz boundary value problems on the unit disk and the upper half-plane"};
   app.require_subcommand(1);

   auto* solve_cmd = app.add_subcommand("solve", "Solve a problem spec, verify it, and write outputs");
   std::string spec, out, format = "text";
   std::optional<double> scale;
   std::optional<int> level;
   solve_cmd->add_option("spec", spec, "Problem spec (JSON)")->required()->check(CLI::ExistingFile);
   solve_cmd->add_option("--out", out, "Output directory")->required();
   solve_cmd->add_option("--tolerance-scale", scale, "Multiply all verification tolerances")
      ->check(CLI::PositiveNumber);
   solve_cmd->add_option("--grid-level", level, "Number of approach levels for trace checks")
      ->check(CLI::Range(2, 20));
   solve_cmd->add_option("--report-format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

   try
   {
      app.parse(argc, argv);
   }
   catch (const CLI::ParseError& e)
   {
      int rc = app.exit(e);
      return rc == 0 ? 0 : exit_schema;
   }
   return run_solve(spec, out, scale, level, format);
}
