#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "operadkit/report.hpp"
#include "spec.hpp"

namespace operadkit::cli {

/// Unknown command, or inputs that do not fit the command.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The job would exceed the configured work estimate.
class WorkLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::size_t nmax = 4;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t max_dim = 4;
  std::size_t max_omega = 3;
  double max_work = 2e10;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  bool exhaustive = true;
  std::size_t violation_count = 0;
  std::vector<Violation> witnesses;
};

struct CohomologyTable {
  std::string complex;
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> cochain_dims;
  std::vector<std::size_t> differential_ranks;
  std::vector<std::size_t> dims;
  bool square_zero = true;
};

struct JobReport {
  std::string command;
  std::vector<std::string> inputs;
  std::size_t nmax = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<CohomologyTable> cohomology;
  std::optional<AlgebraSpec> produced;  ///< structure built by split-* commands

  bool pass() const;
};

const std::vector<std::string>& command_names();

JobReport run_command(const Options& options, const InputSet& inputs);

nlohmann::json to_json(const JobReport& report);
std::string render_machine(const JobReport& report);
std::string render_text(const JobReport& report);

}  // namespace operadkit::cli
