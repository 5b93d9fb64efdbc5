#pragma once

#include <cstdint>

namespace cdl {

/// Resource limits for a single exact search. Exhaustion is an outcome,
/// not an error.
struct Budget {
    std::uint64_t max_nodes = 100'000'000ULL;
    std::int64_t max_millis = 60'000;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    std::int64_t millis = 0;
};

}  // namespace cdl
