#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tanglekit::cli {

// Exit codes: 0 every check passed, 1 a check failed (VIOLATION lines were
// printed), 2 usage or input error. On 0 and 1 the last line written to
// `out` is `RESULT <subcommand> <pass|fail> checked=<n>`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tanglekit::cli
