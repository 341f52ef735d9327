#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bettisplit {

// Exit codes: 0 computed / verdict yes, 1 computed / verdict no,
// 2 usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bettisplit
