#pragma once

// The measuringkit verbs. Exit codes: 0 every check passed, 1 a check failed
// (the report carries a witness), 2 usage, parse, schema or reference error.

#include <ostream>
#include <string>
#include <vector>

namespace measuringkit::cli {

struct VerbInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> operations;  // library operations the verb reaches
};

const std::vector<VerbInfo>& verb_table();

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace measuringkit::cli
