#ifndef VFCERT_CLI_HPP
#define VFCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace vfcert::cli {

/// Exit codes: 0 success, 1 definite mathematical negative, 2 inconclusive
/// or budget exhaustion, 64 usage error, 65 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfcert::cli

#endif
