#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycontact::cli {

// Exit codes: 0 ok / nothing found, 1 countermodel or failed check found,
// 2 parse or usage error, 3 I/O error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycontact::cli
