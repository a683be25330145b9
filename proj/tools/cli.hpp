#pragma once

// Command-line front end: spectrum, jacobi, resonant and verify subcommands.
// Exit codes: 0 success, 1 usage, 2 domain, 3 verification failure.

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace rankone::cli {

inline constexpr const char *schema_version = "1";
inline constexpr const char *config_env = "RANKONE_CONFIG";

enum ExitCode : int { ok = 0, usage = 1, domain = 2, verification = 3 };

/// key=value lines; '#' starts a comment. Throws std::invalid_argument on a
/// malformed line or unknown key (format, max_terms, threads).
std::map<std::string, std::string> parse_config(const std::string &text);

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rankone::cli
