#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "operadkit/errors.hpp"
#include "spec.hpp"

int main(int argc, char** argv) {
  using namespace operadkit::cli;

  CLI::App app{"Operad constructions, axiom checks and cohomology of finite-dimensional algebras"};
  Options options;
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string output;

  std::string commands;
  for (const auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;

  app.add_option("--input", inputs, "algebra or semigroup description (JSON), repeatable")->check(CLI::ExistingFile);
  app.add_option("--cmd", options.command, "one of: " + commands)->required();
  app.add_option("--nmax", options.nmax, "arity or degree cap");
  app.add_option("--samples", options.samples, "random samples when exhaustive enumeration is too large");
  app.add_option("--seed", options.seed, "seed for sampled checks");
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--output", output, "write the produced algebra description here");
  app.add_option("--max-dim", options.max_dim, "largest accepted algebra dimension");
  app.add_option("--max-omega", options.max_omega, "largest accepted semigroup order");
  app.add_option("--max-work", options.max_work, "refuse jobs whose estimated cost is larger");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
    const JobReport report = run_command(options, parse_inputs(paths));
    std::cout << (format == "machine" ? render_machine(report) : render_text(report));
    if (!output.empty()) {
      if (!report.produced) {
        std::cerr << "error: " << options.command << " produced no algebra to write\n";
        return report.pass() ? 2 : 1;
      }
      std::ofstream out(output);
      out << to_json(*report.produced).dump(2) << "\n";
      if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        return 2;
      }
    }
    return report.pass() ? 0 : 1;
  } catch (const WorkLimitExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
