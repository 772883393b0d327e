#pragma once

#include <cstdint>
#include <ostream>

namespace percolab::cli {

/// Runs the built-in property suite, printing one line per property.
/// Returns the number of failed properties.
int run_verify(bool quick, std::uint64_t seed, std::ostream& out);

}  // namespace percolab::cli
