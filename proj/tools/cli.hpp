#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcpoly::cli {

/// Runs the command line given in args (program name excluded). Exit codes:
/// 0 success / all identities hold, 1 a verification found a counterexample,
/// 2 usage or parse error, 3 precondition violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcpoly::cli
