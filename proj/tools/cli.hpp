#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace marsrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;

// Runs one `marsrank` invocation. args[0] is the program name. A path of "-"
// reads `in` or writes `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace marsrank::cli
