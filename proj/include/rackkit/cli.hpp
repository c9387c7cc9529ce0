#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rackkit/fingroup.hpp"
#include "rackkit/stability.hpp"

namespace rackkit {

/// "Z4", "S3", "Z2xZ3", or "file:PATH" for a group table file.
FiniteGroup parse_group(const std::string& spec);

/// id | neg | mul:k (g ↦ g^k) | inner:u | swap (factors of H×H) | perm:i0,i1,...
GroupAutomorphism parse_automorphism(const FiniteGroup& g, const std::string& spec);

/// "1,2,3" → {1,2,3}; empty string gives an empty list.
std::vector<Elem> parse_list(const std::string& text);

std::vector<std::string> oracle_suites();

/// Runs one theorem-check suite. Throws Error(InvalidArgument) for unknown names.
void run_oracle(const std::string& suite, const SearchOptions& options, std::ostream& out);

/// Exit codes: 0 ok, 1 validation failure, 2 usage error, 3 cap or budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackkit
