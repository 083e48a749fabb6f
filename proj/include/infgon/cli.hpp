#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infgon {

// Dispatches one CLI invocation (argv without the program name). Returns 0 on
// success, 1 with a structured JSON error {code,message,context} on stdout for
// library errors, 2 for usage errors.
int cli_dispatch(const std::vector<std::string>& argv, std::ostream& out,
                 std::ostream& err);

}  // namespace infgon
