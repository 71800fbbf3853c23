#include "seqcomp/seeds.hpp"

#include "seqcomp/constructions.hpp"

#include <array>
#include <stdexcept>

namespace seqcomp {

namespace {

ResidueSequence binary(std::vector<int> bits) { return ResidueSequence(2, std::move(bits)); }

} // namespace

GolayPair::GolayPair(ResidueSequence first, ResidueSequence second)
    : a(std::move(first)), b(std::move(second)) {
    if (a.q() != 2 || b.q() != 2)
        throw std::invalid_argument("GolayPair: sequences must be binary");
    if (a.length() != b.length())
        throw std::invalid_argument("GolayPair: sequences must have equal length");
    const long L = static_cast<long>(a.length());
    for (long tau = 1; tau <= L - 1; ++tau) {
        CyclotomicSum sum = accf(a, a, tau);
        sum.accumulate(accf(b, b, tau));
        if (!cyc_is_zero(sum))
            throw VerificationError("GolayPair: AACF sum nonzero at shift " + std::to_string(tau));
    }
}

GolayPair golay_kernel(std::size_t L) {
    switch (L) {
        case 1:
            return GolayPair(binary({0}), binary({0}));
        case 2:
            return GolayPair(binary({0, 0}), binary({0, 1}));
        case 10:
            return GolayPair(binary({0, 0, 1, 0, 1, 0, 1, 1, 0, 0}),
                             binary({0, 0, 1, 0, 0, 0, 0, 0, 1, 1}));
        case 26:
            return GolayPair(
                binary({0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1,
                        0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0}),
                binary({0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0,
                        0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1}));
        default:
            throw std::invalid_argument("golay_kernel: unsupported length " + std::to_string(L));
    }
}

const std::vector<std::size_t>& golay_kernel_lengths() {
    static const std::vector<std::size_t> lengths{1, 2, 10, 26};
    return lengths;
}

GolayPair golay_double(const GolayPair& p) {
    return GolayPair(concat(p.a, p.b), concat(p.a, p.b.shifted(1)));
}

bool golay_length_realizable(std::size_t L) {
    if (L == 0) return false;
    // Reachable lengths are 2^a, 2^a * 10, 2^a * 26: an odd part of 5 or 13
    // only ever occurs alongside the factor of 2 baked into its kernel.
    const bool even = L % 2 == 0;
    while (L % 2 == 0) L /= 2;
    return L == 1 || ((L == 5 || L == 13) && even);
}

GolayPair golay_pair(std::size_t L) {
    if (L == 0) throw std::invalid_argument("golay_pair: length must be positive");
    std::size_t kernel = L;
    int doublings = 0;
    while (kernel % 2 == 0 && kernel != 2 && kernel != 10 && kernel != 26) {
        kernel /= 2;
        ++doublings;
    }
    if (kernel != 1 && kernel != 2 && kernel != 10 && kernel != 26)
        throw std::invalid_argument("golay_pair: length " + std::to_string(L) +
                                    " not reachable from the kernel catalog");
    GolayPair p = golay_kernel(kernel);
    for (int i = 0; i < doublings; ++i) p = golay_double(p);
    return p;
}

SetFamily gcp_to_ccc(const GolayPair& p) {
    SequenceSet set0(2, {p.a, p.b});
    SequenceSet set1(2, {p.b.shifted(1).reversed(), p.a.reversed()});
    SetFamily family({set0, set1});
    if (!is_ccc(family))
        throw VerificationError("gcp_to_ccc: mate construction failed CCC verification");
    return family;
}

SetFamily seed_ccc(std::size_t L) { return gcp_to_ccc(golay_pair(L)); }

} // namespace seqcomp
