#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor::cli {

/// Runs the arbor command line. Streams are injectable for tests; the return
/// value is the process exit code (1 on usage or input errors, verifier
/// codes 0/2/3 for verify).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
