#include "ciflie/config.hpp"

#include <cstdlib>
#include <string>

namespace ciflie::config {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoull(v);
        } catch (const std::exception&) {
            return fallback;
        }
    }
    return fallback;
}

std::uint64_t& universe_cap_slot() {
    static std::uint64_t cap = env_or("CIF_UNIVERSE_CAP", 100000);
    return cap;
}

std::uint64_t& exhaustive_cap_slot() {
    static std::uint64_t cap = env_or("CIF_EXHAUSTIVE_CAP", 1000000);
    return cap;
}

} // namespace

std::uint64_t universe_cap() { return universe_cap_slot(); }
void set_universe_cap(std::uint64_t cap) { universe_cap_slot() = cap; }

std::uint64_t exhaustive_cap() { return exhaustive_cap_slot(); }
void set_exhaustive_cap(std::uint64_t cap) { exhaustive_cap_slot() = cap; }

} // namespace ciflie::config
