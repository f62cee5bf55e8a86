#pragma once

#include <iosfwd>

namespace flowsynth::cli {

/// Entry point behind the `flowsynth` binary. Exit codes: 0 success or
/// validation pass, 1 validation mismatch, 2 usage/IO/pipeline error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flowsynth::cli
