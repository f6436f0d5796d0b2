#pragma once

#include <iosfwd>
#include <string>

#include "gkm_cli/config.hpp"

namespace gkm::cli {

/// Shortest round-trip decimal form of v (std::to_chars).
std::string format_double(double v);

/// Executes the command. Output goes to cfg.out, or to `out` when cfg.out is
/// empty. Returns the process exit status: 0 on success, 1 when a verify
/// report fails. Library errors propagate as exceptions.
int run(const RunConfig& cfg, std::ostream& out);

}  // namespace gkm::cli
