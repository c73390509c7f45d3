#pragma once

#include <cstddef>
#include <cstdlib>

namespace brauercat {

// Hard bound on the number of terms a morphism may accumulate during
// rewriting. Exceeding it is an error, never silent truncation.
// Overridable through the BRAUER_TERM_CAP environment variable.
inline std::size_t term_cap() {
    static const std::size_t cap = [] {
        if (const char* s = std::getenv("BRAUER_TERM_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return cap;
}

inline constexpr int kAntisymmetrizerCap = 8;          // r! terms, 8! = 40320
inline constexpr std::size_t kTensorEntryGuard = 10000000;  // m^(s+t)
inline constexpr long kInvariantGuard = 6561;          // m^r, 3^8
inline constexpr int kSpanningCap = 10;                // s+t for spanning sets
inline constexpr int kSymSpanCap = 8;                  // r! orbit images
inline constexpr int kRenderTermCap = 50;

}  // namespace brauercat
