#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgm {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int file = 3;
inline constexpr int syntax = 4;
inline constexpr int invalid_input = 5;
inline constexpr int field = 6;
inline constexpr int size = 7;
inline constexpr int internal = 8;
}  // namespace exit_code

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgm
