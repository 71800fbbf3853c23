// Value types for q-ary sequences, sequence sets, and families of sets.
// All residues are kept in canonical form 0..q-1.

#pragma once

#include <cstdint>
#include <vector>

#include "seqcomp/cyclotomic.hpp"

namespace seqcomp {

struct Alphabet {
    std::uint32_t q;

    explicit Alphabet(std::uint32_t order);

    int reduce(long long value) const;
};

class ResidueSequence {
public:
    ResidueSequence(std::uint32_t q, std::vector<int> elems);

    std::uint32_t q() const { return q_; }
    std::size_t length() const { return elems_.size(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<int>& elems() const { return elems_; }

    // Elementwise addition of a constant over Z_q (the paper-style a (+) d).
    ResidueSequence shifted(int d) const;
    // Entry e -> (q - e) mod q.
    ResidueSequence negated() const;
    ResidueSequence reversed() const;

    bool operator==(const ResidueSequence&) const = default;

private:
    std::uint32_t q_;
    std::vector<int> elems_;
};

// Rectangular N x L matrix of residues, rows are sequences.
class SequenceSet {
public:
    SequenceSet(std::uint32_t q, std::vector<ResidueSequence> rows);

    std::uint32_t q() const { return q_; }
    std::size_t size() const { return rows_.size(); }   // N
    std::size_t length() const { return length_; }      // L
    const ResidueSequence& row(std::size_t n) const { return rows_[n]; }
    const std::vector<ResidueSequence>& rows() const { return rows_; }

    bool operator==(const SequenceSet&) const = default;

private:
    std::uint32_t q_;
    std::size_t length_;
    std::vector<ResidueSequence> rows_;
};

// Ordered family of M sequence sets sharing N, L, q.
class SetFamily {
public:
    explicit SetFamily(std::vector<SequenceSet> sets);

    std::uint32_t q() const { return sets_[0].q(); }
    std::size_t size() const { return sets_.size(); }        // M
    std::size_t flock_size() const { return sets_[0].size(); } // N
    std::size_t length() const { return sets_[0].length(); }   // L
    const SequenceSet& set(std::size_t m) const { return sets_[m]; }
    const std::vector<SequenceSet>& sets() const { return sets_; }

    bool operator==(const SetFamily&) const = default;

private:
    std::vector<SequenceSet> sets_;
};

} // namespace seqcomp
