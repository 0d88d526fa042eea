#pragma once

#include "hilbproj/projection.hpp"
#include "hilbproj/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbproj {

// Cycle type of Frobenius on the d points of a fiber: the multiset of
// irreducible-factor degrees, sorted non-increasing, summing to d.
struct CycleType {
    explicit CycleType(std::vector<int> parts);
    std::vector<int> parts;

    int sum() const;
    std::string str() const;  // "3,1"
    friend bool operator==(const CycleType& a, const CycleType& b) { return a.parts == b.parts; }
};

enum class SampleStatus { accepted, discarded, skipped };

struct FrobeniusSample {
    SampleStatus status;
    std::optional<CycleType> type;  // set when accepted
    std::string reason;             // set when discarded/skipped
};

// Reduce F and z mod p, restrict to the pencil line with parameter s, and
// read off the factor degrees when the reduction is squarefree of degree d.
// Non-squarefree reductions are discarded; unusable primes (dividing a
// denominator, or with F(z) = 0 mod p) are skipped with a reason.
// Requires m = 1 and p > d.
FrobeniusSample frobenius_sample(const Hypersurface& a, const Center& z, std::uint64_t p,
                                 std::uint64_t s);

struct WitnessReport {
    int d = 0;
    int samples_used = 0;  // accepted
    int discarded = 0;
    int skipped = 0;
    bool seen_d_cycle = false;
    bool seen_transposition_type = false;
    bool seen_long_prime_cycle = false;
    bool transposition_required = false;
    bool long_prime_required = false;
    // "symmetric-group evidence" | "inconclusive"; evidence only, never proof.
    std::string verdict;
    std::vector<std::pair<std::string, int>> histogram;  // cycle type -> count
};

// A d-cycle witnesses transitivity; a p-cycle for a prime d/2 < p < d forces
// primitivity; a transposition then generates the full symmetric group. For
// d <= 3 the d-cycle and a transposition suffice, and the long-prime flag is
// waived when no prime lies in (d/2, d).
WitnessReport symmetric_group_witness(const std::vector<CycleType>& samples, int d);

// Deterministic seeded sampling loop over (p, s) with primes drawn from
// (d, prime_bound); `samples` counts attempts. Bit-reproducible per seed.
WitnessReport run_monodromy_sampling(const Hypersurface& a, const Center& z, int samples,
                                     std::uint64_t seed, std::uint64_t prime_bound = 500);

}  // namespace hilbproj
