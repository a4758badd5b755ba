#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orthokit/cli.hpp"

int main(int argc, char** argv) {
  using namespace orthokit;

  CLI::App app{"Löwdin orthogonalizations and the decompositions built on them"};
  app.set_version_flag("--version", "orthokit 0.1.0");

  cli::RunConfig config;
  std::string command;
  std::string format = "csv";

  app.add_option("command", command, "symmetric | canonical | polar | svd | pca | verify | relations")
      ->required()
      ->check(CLI::IsMember(cli::command_names()));
  app.add_option("--input", config.input_path, "matrix file, one row per line")->required();
  app.add_option("--output-dir", config.output_dir, "directory for factor files and report.json")
      ->capture_default_str();
  app.add_option("--format", format, "csv or tsv")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();
  app.add_option("--precision", config.output_precision, "significant digits in output files")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  auto& tol = config.tolerances;
  app.add_option("--tol-orthonormality", tol.orthonormality_tol, "max |Z^H Z - I|")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-reconstruction", tol.reconstruction_tol, "relative factor residual")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--rank-tol", tol.rank_tol, "relative eigenvalue cutoff for full rank")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-hermiticity", tol.hermiticity_tol, "hermiticity check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--eigen-tol", tol.eigen_convergence_tol, "Jacobi convergence threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-sweeps", tol.max_sweeps, "Jacobi sweep limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code::input_error;
  }

  config.command = *cli::parse_command(command);
  config.format = format == "tsv" ? MatrixFormat::Tsv : MatrixFormat::Csv;

  const cli::RunResult result = cli::execute(config);
  if (result.report.contains("error")) {
    std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << '\n';
  }
  std::cout << (result.report["pass"].get<bool>() ? "PASS" : "FAIL") << ' ' << command << ' '
            << (config.output_dir / "report.json").string() << '\n';
  return result.exit_status;
}
