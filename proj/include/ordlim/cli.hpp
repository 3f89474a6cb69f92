#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordlim {

// One row per subcommand; `covers` names the library operations reachable
// through it. The coverage test checks that every operation appears under
// exactly one subcommand.
struct SubcommandSpec {
  const char* name;
  const char* summary;
  std::vector<const char*> covers;
};

const std::vector<SubcommandSpec>& cli_dispatch_table();
std::vector<std::string> all_operation_names();

// Runs the CLI on the given arguments (without the program name).
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 I/O or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordlim
