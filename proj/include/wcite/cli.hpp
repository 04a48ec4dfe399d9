#pragma once

// Command-line front end. `run_cli` takes the arguments after the program
// name so tests can drive commands in-process.
//
// Exit codes: 0 success, 1 data errors (rejected rows, failed checks,
// module errors), 2 unreadable input files. Usage errors return CLI11's
// code.

#include <iosfwd>
#include <string>
#include <vector>

namespace wcite::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUnreadable = 2;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts a single character, "\t", "tab" or "comma".
char parse_delimiter(const std::string& text);

} // namespace wcite::cli
