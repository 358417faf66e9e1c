#pragma once

#include <cstdint>

namespace ciflie::config {

/// Cap on the number of ambient elements any exhaustive loop may visit.
/// Default 100000; the CIF_UNIVERSE_CAP environment variable overrides the
/// default, and set_universe_cap overrides both (used by the CLI flag).
std::uint64_t universe_cap();
void set_universe_cap(std::uint64_t cap);

/// Cap on the raw size of the table-enumeration search space.
std::uint64_t exhaustive_cap();
void set_exhaustive_cap(std::uint64_t cap);

} // namespace ciflie::config
