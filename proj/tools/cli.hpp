#ifndef PIM_TOOLS_CLI_HPP_
#define PIM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pim::cli {

/// Dispatches one invocation; args excludes the program name.
/// Exit status: 0 success, 1 usage or parse error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pim::cli

#endif  // PIM_TOOLS_CLI_HPP_
