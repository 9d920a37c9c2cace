#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/lattice.hpp"

namespace hecke::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_numerical = 3,
};

// Grammar (no whitespace): SIGN? FLOAT ((SIGN FLOAT)? 'i')?, where FLOAT is
// digits with optional fraction and exponent. "i" alone is rejected; write "1i".
cplx parse_complex(std::string_view text);

nlohmann::json complex_json(cplx z);

// Entry point behind the `hecke` executable. JSON/CSV go to `out`, diagnostics
// to `err`; the return value is the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hecke::cli
