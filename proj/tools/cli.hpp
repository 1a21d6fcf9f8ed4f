#pragma once

#include <iosfwd>

namespace selflink::cli {

/// Runs one subcommand. Exit status: 0 success / true verdict, 1 computed
/// negative verdict, 2 input or parse error, 3 unsupported request
/// (missing root in the field, impossible degree profile).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The worked-example regression corpus; prints one ok/FAIL line per entry.
int selftest(std::ostream& out);

} // namespace selflink::cli
