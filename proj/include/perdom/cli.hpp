#pragma once

// Command-line front end. Every subcommand writes one JSON report to `out`.
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include "perdom/siegel.hpp"

namespace perdom::cli {

inline constexpr const char* kToolName = "perdom";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

/// `args` excludes the program name. When `human` is set a short summary goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool human = false);

/// {"rows", "cols", "entries": [[re, im], ...]} in row-major order.
siegel::CMatrix read_complex_matrix(const std::string& path);
/// Array of integer rows, or {"rows", "cols", "entries"}.
IntMatrix read_int_matrix(const std::string& path);

}  // namespace perdom::cli
