#pragma once

#include <cstdint>
#include <random>

namespace hilbproj {

// Deterministic 64-bit generator. All derived draws are spelled out here (no
// std::uniform_int_distribution, whose output is implementation-defined), so
// seeded runs are bit-reproducible across standard libraries.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish value in [0, n); n >= 1. Plain modulo reduction: the bias
    // is ~n/2^64 and irrelevant for sampling and test-case generation.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    // Inclusive range.
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hilbproj
