#pragma once

// Command-line surface. Arguments are argv without the program name; exit
// code 0 = success, 1 = a verification failed, 2 = bad input.

#include <iosfwd>
#include <string>
#include <vector>

namespace qflag {

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

// "1,3" / "2..5" / "1,3..5,7" -> sorted list; throws on junk or duplicates
std::vector<int> parse_set_literal(const std::string& text);

}  // namespace qflag
