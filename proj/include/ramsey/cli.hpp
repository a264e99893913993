#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramsey {

// args excludes the program name. Exit codes: 0 success, 1 falsified claim or
// invalid witness, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey
