// Aperiodic correlation engine and set/family classifiers.
//
// accf(a, b, tau) returns the exact correlation sum as a CyclotomicSum;
// the classifiers decide complementarity properties with the exact zero
// test by default, or with the floating oracle when asked.

#pragma once

#include "seqcomp/cyclotomic.hpp"
#include "seqcomp/sequence.hpp"

namespace seqcomp {

// Aperiodic cross-correlation of two equal-length q-ary sequences.
// For 0 <= tau <= L-1: sum_{i=0}^{L-1-tau} xi^(a_i - b_{i+tau});
// mirrored for negative shifts, zero outside (-L, L).
CyclotomicSum accf(const ResidueSequence& a, const ResidueSequence& b, long tau);

// Row-wise sum of accf over two sequence sets of equal dimensions.
CyclotomicSum set_accf(const SequenceSet& A, const SequenceSet& B, long tau);

// All shifts of accf(a, b, .) in one record; values[tau + L - 1] is shift tau.
struct CorrelationProfile {
    std::uint32_t q;
    long length;
    std::vector<CyclotomicSum> values;

    const CyclotomicSum& at(long tau) const { return values[static_cast<std::size_t>(tau + length - 1)]; }
};

CorrelationProfile correlation_profile(const ResidueSequence& a, const ResidueSequence& b);

// CSS: set AACF vanishes at every nonzero shift.
bool is_css(const SequenceSet& A, Engine engine = Engine::exact);

// ESCSS: set AACF vanishes at every even nonzero shift.
bool is_escss(const SequenceSet& A, Engine engine = Engine::exact);

// Mutual even-shift orthogonality of two sets (the weakened Lemma-style
// precondition): set cross-correlation zero at every even shift.
bool even_shift_orthogonal(const SequenceSet& A, const SequenceSet& B,
                           Engine engine = Engine::exact);

// Largest Z in [1, L] for which the family is a (M, N, L, Z)-ZCCS.
// Returns 0 when the zero-shift cross-correlation condition already fails
// (no ZCCS of any width exists for the family).
int zcz_width(const SetFamily& F, Engine engine = Engine::exact);

bool is_mocss(const SetFamily& F, Engine engine = Engine::exact);
bool is_ccc(const SetFamily& F, Engine engine = Engine::exact);

struct ClassificationReport {
    bool is_css = false;     // every member set individually
    bool is_escss = false;   // every member set individually
    int zcz_width = 0;       // 0 = not a ZCCS
    bool is_mocss = false;   // zcz_width == L
    bool is_ccc = false;     // MOCSS with M == N
    bool feng_optimal = false; // M == N * floor(L / Z)
};

ClassificationReport classify(const SetFamily& F, Engine engine = Engine::exact);

} // namespace seqcomp
