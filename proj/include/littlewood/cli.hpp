#ifndef LITTLEWOOD_CLI_HPP
#define LITTLEWOOD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace littlewood::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Output schema version written into every JSON record.
inline constexpr const char* kSchemaVersion = "v1";

/// Runs the command-line interface. `args` excludes the program name.
/// Results go to `out`; error records (one JSON line) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC 4180 field quoting: wraps in double quotes and doubles embedded quotes.
std::string csv_quote(const std::string& field);

}  // namespace littlewood::cli

#endif
