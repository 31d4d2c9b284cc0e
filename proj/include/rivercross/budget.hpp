#pragma once

#include <cstddef>
#include <stdexcept>

namespace rivercross {

/// Thrown when an enumeration would exceed a configured budget. Callers get a
/// clean error instead of an unbounded allocation.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Workload limits for the exhaustive parts of the library. The defaults keep
/// every operation at desk scale; raise them deliberately if you know what a
/// larger instance costs.
struct Budget {
    int couples = 8;                      // largest n accepted by enumerators
    std::size_t paths = 2'000'000;        // simple-path enumeration cap
    std::size_t walks = 8'000'000;        // bounded-length walk cap (categories)

    void check_couples(int n) const {
        if (n > couples)
            throw budget_error("instance too large: n exceeds the configured cap");
    }
};

}  // namespace rivercross
