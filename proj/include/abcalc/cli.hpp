#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abcalc {

// Exit codes: 0 success, 2 parse error, 3 domain or invariant error,
// 4 precision or configured cap exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in);

}  // namespace abcalc
