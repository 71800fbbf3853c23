// Built-in golden datasets used by the demo subcommands and the acceptance
// suite: published example sequences, the 9-set ternary ZCCS table, and the
// published achievable-length list for the block-concatenation MOCSS.

#pragma once

#include <vector>

#include "seqcomp/constructions.hpp"
#include "seqcomp/ebf.hpp"
#include "seqcomp/sequence.hpp"

namespace seqcomp::builtin {

// The three length-9 ternary sequences of the digit-order fixture
// (functions x1, x2, x1*x2 + 1 over q = 3, m = 2).
std::vector<ResidueSequence> example1_sequences();

// EBF specs generating example1_sequences(), in the same order.
std::vector<EbfSpec> example1_specs();

// Parameters of the published 5-row, length-25 CSS example.
EbfSpec example2_spec();

// The five published rows (row n of the construction is printed row n).
SequenceSet example2_css();

// Parameters of the published ternary (9,3,27,9)-ZCCS example.
Theorem2Params table1_params();

// All 9 x 3 x 27 published symbols.
SetFamily table1_family();

// Published achievable lengths (L <= 40) for the binary (2,4)-MOCSS row.
const std::vector<long long>& table3_published_lengths();

} // namespace seqcomp::builtin
