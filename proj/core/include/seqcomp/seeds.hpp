// Catalog of binary Golay complementary pairs and the small complete
// complementary codes built from them. Kernel pairs for lengths 10 and 26
// were found by exhaustive computer search; every catalog entry is
// re-validated with the exact correlation engine before use.

#pragma once

#include <cstdint>
#include <vector>

#include "seqcomp/correlation.hpp"
#include "seqcomp/sequence.hpp"

namespace seqcomp {

// Binary pair whose AACFs sum to zero at every nonzero shift; the
// constructor enforces this with the exact engine.
struct GolayPair {
    ResidueSequence a;
    ResidueSequence b;

    GolayPair(ResidueSequence first, ResidueSequence second);

    std::size_t length() const { return a.length(); }
};

// Stored kernels; L must be 1, 2, 10, or 26.
GolayPair golay_kernel(std::size_t L);

const std::vector<std::size_t>& golay_kernel_lengths();

// (a|b, a|(b+1)): a pair of twice the length.
GolayPair golay_double(const GolayPair& p);

// Kernel for L in {1, 2, 10, 26} doubled as needed; L must be of the form
// 2^a, 2^a * 10, or 2^a * 26.
GolayPair golay_pair(std::size_t L);

// True iff a binary pair of this length is reachable from the catalog.
bool golay_length_realizable(std::size_t L);

// Pair plus its mate as a (2, L)-CCC: set 0 = [a; b], set 1 =
// [reverse(b+1); reverse(a)]. Verified before returning.
SetFamily gcp_to_ccc(const GolayPair& p);

// Convenience: gcp_to_ccc(golay_pair(L)).
SetFamily seed_ccc(std::size_t L);

} // namespace seqcomp
