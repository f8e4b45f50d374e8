#pragma once

#include <iosfwd>
#include <string>

namespace isk4 {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 positive answer, 1 valid negative answer (witness carried),
// 2 usage or input error, 3 inconclusive (budget exhausted).
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace isk4
