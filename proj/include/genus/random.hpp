#pragma once

#include <cstdint>
#include <random>

#include "genus/errors.hpp"

namespace genus {

/// Deterministic random stream for seeded constructions. mt19937_64 with
/// rejection sampling, so a seed produces the same values on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw PreconditionError("empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    int int_in(int lo, int hi) { // inclusive
        if (lo > hi) throw PreconditionError("empty range");
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    int nonzero_int_in(int lo, int hi) {
        int v;
        do {
            v = int_in(lo, hi);
        } while (v == 0);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace genus
