// Generative constructions for complementary sequence sets, ZCCS families,
// MOCSS families, and CCCs, plus the interleave/concatenation combinators
// they rely on. Constructors can verify their own inputs and outputs with
// the exact correlation engine; failed verification throws.

#pragma once

#include <cstdint>
#include <vector>

#include "seqcomp/correlation.hpp"
#include "seqcomp/ebf.hpp"
#include "seqcomp/sequence.hpp"

namespace seqcomp {

// When to run the exhaustive correlation checks on inputs/outputs.
enum class VerifyPolicy { always, debug, never };

// Thrown when a claimed correlation property fails exhaustive verification.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool verification_enabled(VerifyPolicy policy);

// (a0, b0, a1, b1, ..., a_{L-1}, b_{L-1})
ResidueSequence interleave(const ResidueSequence& a, const ResidueSequence& b);

ResidueSequence concat(const ResidueSequence& a, const ResidueSequence& b);

// Row n is the associated sequence of f + n * x_{pi(1)}, n = 0..q-1; the
// spec must have full width (pi over {1..m}). Output is a (q, q^m)-CSS.
SequenceSet build_css_theorem1(const EbfSpec& f,
                               VerifyPolicy policy = VerifyPolicy::debug);

struct Theorem2Params {
    std::uint32_t q = 2;
    int m = 2;
    int v = 0;
    int alpha = 1;                        // coprime with q
    int beta = 1;                         // coprime with q
    std::vector<int> pi;                  // permutation of {1..m-v}
    std::vector<std::vector<int>> coeffs; // as EbfSpec, q-1 rows of m entries
    int c0 = 0;

    void validate() const;
};

// Family of q^(v+1) sets of q rows of length q^m; a (q^{v+1}, q, q^m,
// q^{m-v})-ZCCS, reducing to a (q, q^m)-CCC when v = 0.
SetFamily build_zccs_theorem2(const Theorem2Params& params,
                              VerifyPolicy policy = VerifyPolicy::debug);

// From an (M, L)-CCC with M even: M sets of M/2 rows of length 2L, set m's
// row k being interleave(row 2k, row 2k+1) of source set m. Every output
// set is an ESCSS and distinct outputs have zero set cross-correlation at
// every even shift.
std::vector<SequenceSet> interleave_escss_theorem3(const SetFamily& ccc,
                                                   VerifyPolicy policy = VerifyPolicy::always);

// L1 alternating blocks: block i is (a (+) d_i) for even i, (b (+) d_i) for
// odd i; result length L1 * L2.
ResidueSequence phi(const ResidueSequence& d, const ResidueSequence& a,
                    const ResidueSequence& b);

// Concatenation product of two even-shift-orthogonal (N, L1)-ESCSSs with an
// (M, L2)-CCC (M even): an (M, M*N, L1*L2)-MOCSS.
SetFamily mocss_lemma4(const SequenceSet& P, const SequenceSet& Q,
                       const SetFamily& ccc,
                       VerifyPolicy policy = VerifyPolicy::always);

// Product of an (M1, L1)-CCC and an (M2, L2)-CCC: an (M1*M2/2, 2*L1*L2)-CCC.
SetFamily ccc_theorem4(const SetFamily& A, const SetFamily& B,
                       VerifyPolicy policy = VerifyPolicy::always);

// Entry e -> (q - e) mod q in every row.
SequenceSet negate_set(const SequenceSet& B);

// How the "-B" block of the block-matrix MOCSS construction is read.
//  additive_inverse: entry e -> (q - e) mod q (the literal reading).
//  symbol_negation:  entry e -> e + q/2 mod q, i.e. multiply the complex
//                    symbol by -1 (even q only; for q = 2 this is the
//                    binary complement b (+) 1).
//  automatic:        try additive_inverse, fall back to symbol_negation;
//                    whichever verifies as a MOCSS wins.
enum class NegationMode { additive_inverse, symbol_negation, automatic };

struct Theorem5Result {
    SetFamily family;
    NegationMode used;
};

// From an (M, L1)-CCC and an (M, L2)-CCC over the same alphabet: M sets of
// size 2M x (L1+L2), rows [a_n | b_n] on top of [a_n | neg(b_n)]; a
// (M, 2M, L1+L2)-MOCSS.
Theorem5Result mocss_theorem5(const SetFamily& A, const SetFamily& B,
                              NegationMode mode = NegationMode::automatic,
                              VerifyPolicy policy = VerifyPolicy::always);

} // namespace seqcomp
