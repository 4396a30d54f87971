#pragma once

#include <string>
#include <vector>

namespace cover {

// Runs one CLI invocation (generate/solve/verify/score/render/bench).
// Returns 0 on success, 1 on invalid input, 2 on internal error. Output goes
// to stdout/stderr.
int cli_main(int argc, const char* const* argv);

// convenience for tests
int cli_main(const std::vector<std::string>& args);

}  // namespace cover
