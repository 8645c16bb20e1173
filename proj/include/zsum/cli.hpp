#ifndef ZSUM_CLI_HPP
#define ZSUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zsum {

// Runs one CLI command. Exit codes: 0 success, 2 usage error, 3 parse error,
// 4 budget/resource error, 5 verify mismatch.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zsum

#endif
