#include "seqcomp/correlation.hpp"

#include <cassert>
#include <stdexcept>

namespace seqcomp {

CyclotomicSum accf(const ResidueSequence& a, const ResidueSequence& b, long tau) {
    if (a.q() != b.q())
        throw std::invalid_argument("accf: alphabet mismatch");
    if (a.length() != b.length())
        throw std::invalid_argument("accf: length mismatch");
    const long L = static_cast<long>(a.length());
    const std::uint32_t q = a.q();
    CyclotomicSum sum(q);
    if (tau >= 0 && tau <= L - 1) {
        for (long i = 0; i + tau < L; ++i)
            sum.add_term(static_cast<std::uint32_t>(
                (a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i + tau)] + static_cast<int>(q)) %
                static_cast<int>(q)));
    } else if (tau <= -1 && tau >= 1 - L) {
        for (long i = 0; i - tau < L; ++i)
            sum.add_term(static_cast<std::uint32_t>(
                (a[static_cast<std::size_t>(i - tau)] - b[static_cast<std::size_t>(i)] + static_cast<int>(q)) %
                static_cast<int>(q)));
    }
    return sum;
}

CyclotomicSum set_accf(const SequenceSet& A, const SequenceSet& B, long tau) {
    if (A.q() != B.q() || A.size() != B.size() || A.length() != B.length())
        throw std::invalid_argument("set_accf: dimension mismatch");
    CyclotomicSum sum(A.q());
    for (std::size_t n = 0; n < A.size(); ++n)
        sum.accumulate(accf(A.row(n), B.row(n), tau));
    return sum;
}

CorrelationProfile correlation_profile(const ResidueSequence& a, const ResidueSequence& b) {
    const long L = static_cast<long>(a.length());
    CorrelationProfile profile{a.q(), L, {}};
    profile.values.reserve(static_cast<std::size_t>(2 * L - 1));
    for (long tau = -(L - 1); tau <= L - 1; ++tau)
        profile.values.push_back(accf(a, b, tau));
    return profile;
}

namespace {

// In debug builds the negative shifts are recomputed directly and checked
// against the conjugate-symmetry identity; release builds rely on it.
bool set_zero_at(const SequenceSet& A, const SequenceSet& B, long tau, Engine engine) {
    const CyclotomicSum forward = set_accf(A, B, tau);
#ifndef NDEBUG
    if (tau != 0) {
        const CyclotomicSum backward = set_accf(B, A, -tau);
        assert(cyc_conjugate(forward) == backward);
    }
#endif
    return cyc_is_zero(forward, engine);
}

} // namespace

bool is_css(const SequenceSet& A, Engine engine) {
    const long L = static_cast<long>(A.length());
    for (long tau = 1; tau <= L - 1; ++tau)
        if (!set_zero_at(A, A, tau, engine)) return false;
    return true;
}

bool is_escss(const SequenceSet& A, Engine engine) {
    const long L = static_cast<long>(A.length());
    for (long tau = 2; tau <= L - 1; tau += 2)
        if (!set_zero_at(A, A, tau, engine)) return false;
    return true;
}

bool even_shift_orthogonal(const SequenceSet& A, const SequenceSet& B, Engine engine) {
    const long L = static_cast<long>(A.length());
    for (long tau = -(L - 1); tau <= L - 1; ++tau) {
        if (tau % 2 != 0) continue;
        if (!cyc_is_zero(set_accf(A, B, tau), engine)) return false;
    }
    return true;
}

int zcz_width(const SetFamily& F, Engine engine) {
    const long L = static_cast<long>(F.length());
    const std::size_t M = F.size();
    // Definition requires zero cross-correlation already at shift zero.
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j)
            if (i != j && !set_zero_at(F.set(i), F.set(j), 0, engine)) return 0;
    long z = 1;
    for (long tau = 1; tau <= L - 1; ++tau) {
        bool all_zero = true;
        for (std::size_t i = 0; i < M && all_zero; ++i)
            for (std::size_t j = 0; j < M && all_zero; ++j)
                if (!set_zero_at(F.set(i), F.set(j), tau, engine)) all_zero = false;
        if (!all_zero) break;
        z = tau + 1;
    }
    return static_cast<int>(z);
}

bool is_mocss(const SetFamily& F, Engine engine) {
    return zcz_width(F, engine) == static_cast<int>(F.length());
}

bool is_ccc(const SetFamily& F, Engine engine) {
    return F.size() == F.flock_size() && is_mocss(F, engine);
}

ClassificationReport classify(const SetFamily& F, Engine engine) {
    ClassificationReport report;
    report.is_css = true;
    report.is_escss = true;
    for (const auto& s : F.sets()) {
        if (report.is_css && !is_css(s, engine)) report.is_css = false;
        if (report.is_escss && !is_escss(s, engine)) report.is_escss = false;
        if (!report.is_css && !report.is_escss) break;
    }
    report.zcz_width = zcz_width(F, engine);
    report.is_mocss = report.zcz_width == static_cast<int>(F.length());
    report.is_ccc = report.is_mocss && F.size() == F.flock_size();
    if (report.zcz_width >= 1) {
        const long long rhs = static_cast<long long>(F.flock_size()) *
                              (static_cast<long long>(F.length()) / report.zcz_width);
        report.feng_optimal = static_cast<long long>(F.size()) == rhs;
    }
    return report;
}

} // namespace seqcomp
