// app.hpp — Command-line front end

#pragma once

#include <iosfwd>

namespace giantwg::cli {

// Exit codes: 0 success, 1 job ran but produced nothing usable (all sweep
// points failed), 2 invalid input or library error, CLI11 codes for usage errors.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace giantwg::cli
