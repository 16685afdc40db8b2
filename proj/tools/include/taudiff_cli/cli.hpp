#pragma once

// Command-line front end and the verification suites it runs.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "taudiff/textio.hpp"

namespace taudiff::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceLimit = 3 };

struct SuiteOptions {
  unsigned degree_bound = 3;
  std::size_t samples = 20;
  std::uint64_t seed = 20240501;
};

enum class Status { pass, fail, skip };

struct SuiteResult {
  std::string name;
  Status status = Status::pass;
  std::string summary;
  std::vector<std::string> details;  // witnesses for failures
};

// leibniz, sequences, split, localization, basechange, commutator, kernel,
// torsor, slices, lift-equivariance, basis
const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite.  NotADomainSuspected turns the
// suite into a skip; other library errors propagate.
SuiteResult run_suite(const std::string& name, const ProblemFile& p, const SuiteOptions& options);

std::string format(const SuiteResult& r);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taudiff::cli
