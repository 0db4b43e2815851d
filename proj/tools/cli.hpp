#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int bad_input = 2;      // PARSE, SCHEMA, unreadable file
inline constexpr int invalid = 3;        // VALIDATION
inline constexpr int negative = 4;       // check/roundtrip verdict is negative
inline constexpr int computation = 5;    // ENUM_CAP, TORSION, OVERFLOW and other runtime failures

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace steiner::cli
