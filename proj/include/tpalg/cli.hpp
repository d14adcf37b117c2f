#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tpalg::cli {

// Batch front end. JSON reports on `out`, diagnostics on `err`.
// Exit code 0: all requested checks pass; 1: at least one FAIL or
// INDETERMINATE verdict (reports still emitted); 2: usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace tpalg::cli
