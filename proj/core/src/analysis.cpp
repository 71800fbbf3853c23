#include "seqcomp/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "seqcomp/seeds.hpp"

namespace seqcomp {

BoundVerdict feng_bound(long long m, long long n, long long l, long long z) {
    if (z < 1) throw std::invalid_argument("feng_bound: z must be >= 1");
    BoundVerdict verdict;
    verdict.m = m;
    verdict.n = n;
    verdict.l = l;
    verdict.z = z;
    verdict.feng_rhs = n * (l / z);
    verdict.suehiro_ok = m <= n;
    verdict.feng_optimal = m == verdict.feng_rhs;
    return verdict;
}

std::vector<LengthWitness> enumerate_theorem5_lengths(long long max_len) {
    if (max_len < 2)
        throw std::invalid_argument("enumerate_theorem5_lengths: max_len must be >= 2");
    std::vector<long long> ccc_lengths;
    for (long long L = 1; L < max_len; ++L)
        if (golay_length_realizable(static_cast<std::size_t>(L))) ccc_lengths.push_back(L);

    std::map<long long, LengthWitness> found;
    for (long long l1 : ccc_lengths)
        for (long long l2 : ccc_lengths) {
            if (l2 < l1) continue;
            const long long total = l1 + l2;
            if (total > max_len) continue;
            if (!found.count(total)) found[total] = LengthWitness{total, l1, l2};
        }
    std::vector<LengthWitness> out;
    out.reserve(found.size());
    for (const auto& [len, witness] : found) out.push_back(witness);
    return out;
}

} // namespace seqcomp
