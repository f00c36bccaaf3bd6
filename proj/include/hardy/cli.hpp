#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hardy/json_io.hpp"

namespace hardy::cli {

inline constexpr std::size_t kDefaultTruncation = 128;
inline constexpr std::size_t kMinTruncation = 8;

struct JobSpec {
  std::string command;  // classify | adjoint | conjugate | spectrum | verify | matrix
  SymbolPair symbols;
  std::optional<ConjugationSpec> conjugation;
  std::optional<cplx> alpha;
  std::optional<cplx> beta;
  std::optional<cplx> lambda;
  std::size_t n = kDefaultTruncation;
  int kmax = kDefaultKmax;
  std::string output = "-";
};

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kPrecondition = 2,
  kNonConvergence = 3,
};

/// Runs one job and returns its JSON report. Throws hardy::Error.
json execute(const JobSpec& job);

/// Full command-line entry point: args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hardy::cli
