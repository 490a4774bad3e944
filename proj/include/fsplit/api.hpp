#pragma once

// Command layer shared by the command-line tool and the Python module: each
// call takes a parsed ring specification and returns a JSON document.

#include <optional>
#include <string>
#include <vector>

#include "fsplit/report.hpp"
#include "fsplit/ringspec.hpp"

namespace fsplit {

struct CommandOptions {
  ComputeOptions compute;
  bool oracle = false;  // cross-check lambda against the linear-algebra oracle
};

Json run_se(const RingSpec& spec, unsigned e, const CommandOptions& options = {});
Json run_signature(const RingSpec& spec, unsigned e_max, const CommandOptions& options = {});

// primes: "x | x,z | P" where P may name a prime from the file; empty means
// every prime in the file. chains use the same syntax and are checked for
// monotonicity in addition to the chains in the file.
Json run_probe(const RingSpec& spec, const std::optional<std::string>& primes, const std::vector<std::string>& chains,
               unsigned e, const std::vector<Rational>& thresholds, const CommandOptions& options = {});

Json run_gorenstein(const RingSpec& spec, const std::optional<std::string>& sop,
                    const std::optional<std::string>& socle, unsigned e, const CommandOptions& options = {});

// Document describing a budget failure part way through a signature sequence.
Json partial_signature(const RingSpec& spec, const SignatureCostGuard& err);

// 1 usage / malformed input, 2 mathematical precondition, 3 budget.
int exit_code_for(ErrorKind kind);

std::vector<Rational> parse_thresholds(const std::string& text);

}  // namespace fsplit
