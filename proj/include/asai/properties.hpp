#ifndef ASAI_PROPERTIES_HPP
#define ASAI_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "asai/hilbert.hpp"

namespace asai {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The full randomized/exhaustive property suite (the CLI `verify` runner).
// Deterministic for a fixed seed; `trials` scales the randomized checks.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int trials);

// Synthetic numeric eigenpacket over Q(sqrt(5)): supported Hecke data at
// every unramified prime <= max_prime drawn from the seed, refinement at
// p = 11 (split). When `level1_profile_k` is positive the S-eigenvalues are
// pinned to the classical-level-1 profile with that parallel weight.
HilbertEigenPacket synthetic_packet_d5(std::uint64_t seed, long max_prime,
                                       long level1_profile_k = 0);

} // namespace asai

#endif
