#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyp {

// Runs the command line given program arguments (without argv[0]). Reports go
// to `out`, diagnostics to `err`. Exit codes: 0 evaluated or held, 1 theorem
// falsified, 2 usage or parse error, 3 search exhausted without a witness.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyp
