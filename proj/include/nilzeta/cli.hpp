#pragma once

#include "nilzeta/torsion.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nilzeta::cli {

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> load_config(const std::string& path);

// Module invariant suites: group, uea, lattice, repdecomp, spectral, zeta, torsion, all.
std::vector<std::string> suite_names();
std::vector<CheckRow> run_suite(const std::string& name, const SpectralConfig& cfg);

// Exit codes: 0 ok, 1 usage error, 2 computation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilzeta::cli
