#pragma once

#include <iosfwd>

namespace pebbling::cli {

/// Exit codes. Decision subcommands answer with yes/no; everything from
/// `usage` up is an error.
enum ExitCode : int
{
    yes = 0,
    no = 1,
    usage = 2,
    format = 3,
    cap = 4,
    internal = 5,
};

/// Runs one `pebble` invocation. `in` backs --stdin; the real binary passes
/// std::cin/std::cout/std::cerr, tests pass string streams.
int run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err);

} // namespace pebbling::cli
