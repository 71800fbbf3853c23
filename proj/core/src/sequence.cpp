#include "seqcomp/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcomp {

Alphabet::Alphabet(std::uint32_t order) : q(order) {
    if (order < 2 || order > kMaxAlphabet)
        throw std::invalid_argument("Alphabet: q must be in [2, 2^16]");
}

int Alphabet::reduce(long long value) const {
    long long r = value % static_cast<long long>(q);
    if (r < 0) r += q;
    return static_cast<int>(r);
}

ResidueSequence::ResidueSequence(std::uint32_t q, std::vector<int> elems)
    : q_(q), elems_(std::move(elems)) {
    Alphabet check(q);
    if (elems_.empty())
        throw std::invalid_argument("ResidueSequence: length must be >= 1");
    for (int e : elems_)
        if (e < 0 || static_cast<std::uint32_t>(e) >= q)
            throw std::invalid_argument("ResidueSequence: element out of range");
}

ResidueSequence ResidueSequence::shifted(int d) const {
    Alphabet alpha(q_);
    std::vector<int> out(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i)
        out[i] = alpha.reduce(static_cast<long long>(elems_[i]) + d);
    return ResidueSequence(q_, std::move(out));
}

ResidueSequence ResidueSequence::negated() const {
    std::vector<int> out(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i)
        out[i] = static_cast<int>((q_ - static_cast<std::uint32_t>(elems_[i])) % q_);
    return ResidueSequence(q_, std::move(out));
}

ResidueSequence ResidueSequence::reversed() const {
    std::vector<int> out(elems_.rbegin(), elems_.rend());
    return ResidueSequence(q_, std::move(out));
}

SequenceSet::SequenceSet(std::uint32_t q, std::vector<ResidueSequence> rows)
    : q_(q), rows_(std::move(rows)) {
    if (rows_.empty())
        throw std::invalid_argument("SequenceSet: needs at least one row");
    length_ = rows_[0].length();
    for (const auto& r : rows_)
        if (r.q() != q_ || r.length() != length_)
            throw std::invalid_argument("SequenceSet: rows must share q and length");
}

SetFamily::SetFamily(std::vector<SequenceSet> sets) : sets_(std::move(sets)) {
    if (sets_.empty())
        throw std::invalid_argument("SetFamily: needs at least one set");
    for (const auto& s : sets_)
        if (s.q() != sets_[0].q() || s.size() != sets_[0].size() ||
            s.length() != sets_[0].length())
            throw std::invalid_argument("SetFamily: member sets must share N, L, q");
}

} // namespace seqcomp
