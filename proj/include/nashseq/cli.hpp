#pragma once

#include <iosfwd>

namespace nashseq::cli {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_undetermined = 3;

/// Parses argv, runs one command and writes its JSON report to out (or to
/// --output). Diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nashseq::cli
