// Family-size bound checks and the achievable-length enumeration for the
// block-concatenation MOCSS construction.

#pragma once

#include <cstdint>
#include <vector>

namespace seqcomp {

struct BoundVerdict {
    long long m = 0;        // set size M
    long long n = 0;        // flock size N
    long long l = 0;        // length L
    long long z = 0;        // zero-correlation-zone width Z
    long long feng_rhs = 0; // N * floor(L / Z)
    bool suehiro_ok = false;   // M <= N
    bool feng_optimal = false; // M == N * floor(L / Z)
};

BoundVerdict feng_bound(long long m, long long n, long long l, long long z);

struct LengthWitness {
    long long length; // l1 + l2
    long long l1;     // both catalog-realizable binary CCC lengths
    long long l2;
};

// All lengths L1 + L2 <= max_len where L1, L2 are binary CCC lengths
// reachable from the doubling-only pair catalog (2^a, 2^a*10, 2^a*26).
// Sorted, one witness per distinct length.
std::vector<LengthWitness> enumerate_theorem5_lengths(long long max_len);

} // namespace seqcomp
