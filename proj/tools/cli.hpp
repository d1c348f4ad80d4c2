#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace agslice::cli {

/// Runs one invocation. JSON goes to out (or the --out file), diagnostics
/// and timings to err. Returns 0 on success, 1 for a negative result with a
/// certificate, 2 for input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agslice::cli
