#pragma once

#include <iosfwd>

namespace termgraph::service {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEmpty = 1;
inline constexpr int kExitInputError = 2;

// Entry point of the `termgraph` command: extract | build | refine | stats | serve.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace termgraph::service
