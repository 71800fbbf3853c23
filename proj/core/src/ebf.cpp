#include "seqcomp/ebf.hpp"

#include <numeric>
#include <stdexcept>

namespace seqcomp {

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int pow_mod(int base, int exp, std::uint32_t q) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = (r * base) % q;
    return static_cast<int>(r);
}

} // namespace

void EbfSpec::validate() const {
    Alphabet alphabet(q);
    if (m < 1) throw std::invalid_argument("EbfSpec: m must be >= 1");
    if (alpha <= 0 || static_cast<std::uint32_t>(alpha) >= q ||
        std::gcd(static_cast<std::uint32_t>(alpha), q) != 1)
        throw std::invalid_argument("EbfSpec: alpha not coprime with q");
    const int w = width();
    if (w < 1 || w > m)
        throw std::invalid_argument("EbfSpec: permutation width must be in [1, m]");
    std::vector<bool> seen(static_cast<std::size_t>(w), false);
    for (int p : pi) {
        if (p < 1 || p > w || seen[static_cast<std::size_t>(p - 1)])
            throw std::invalid_argument("EbfSpec: pi is not a permutation of {1..w}");
        seen[static_cast<std::size_t>(p - 1)] = true;
    }
    if (coeffs.size() != static_cast<std::size_t>(q - 1))
        throw std::invalid_argument("EbfSpec: coeffs must have q-1 rows");
    for (const auto& row : coeffs) {
        if (row.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("EbfSpec: coeffs rows must have m entries");
        for (int c : row)
            if (c < 0 || static_cast<std::uint32_t>(c) >= q)
                throw std::invalid_argument("EbfSpec: coefficient out of range");
    }
    if (c0 < 0 || static_cast<std::uint32_t>(c0) >= q)
        throw std::invalid_argument("EbfSpec: c0 out of range");
}

std::vector<std::vector<int>> EbfSpec::zero_coeffs(std::uint32_t q, int m) {
    return std::vector<std::vector<int>>(q - 1, std::vector<int>(static_cast<std::size_t>(m), 0));
}

std::vector<int> qary_digits(long long x, int m, std::uint32_t q) {
    if (x < 0 || x >= pow_ll(q, m))
        throw std::invalid_argument("qary_digits: x out of range");
    std::vector<int> digits(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        digits[static_cast<std::size_t>(k)] = static_cast<int>(x % q);
        x /= q;
    }
    return digits;
}

int evaluate(const EbfSpec& f, const std::vector<int>& digits) {
    const std::uint32_t q = f.q;
    long long acc = f.c0;
    const int w = f.width();
    for (int k = 0; k + 1 < w; ++k) {
        const int xa = digits[static_cast<std::size_t>(f.pi[static_cast<std::size_t>(k)] - 1)];
        const int xb = digits[static_cast<std::size_t>(f.pi[static_cast<std::size_t>(k + 1)] - 1)];
        acc += static_cast<long long>(f.alpha) * xa % q * xb % q;
    }
    for (std::uint32_t l = 1; l < q; ++l) {
        const auto& row = f.coeffs[l - 1];
        for (int k = 0; k < f.m; ++k) {
            const int c = row[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            acc += static_cast<long long>(c) *
                   pow_mod(digits[static_cast<std::size_t>(k)], static_cast<int>(l), q);
        }
    }
    return static_cast<int>(acc % q);
}

ResidueSequence associated_sequence(const EbfSpec& f) {
    f.validate();
    const long long n = pow_ll(f.q, f.m);
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::vector<int> digits(static_cast<std::size_t>(f.m), 0);
    for (long long i = 0; i < n; ++i) {
        elems[static_cast<std::size_t>(i)] = evaluate(f, digits);
        // Increment the little-endian digit counter.
        for (int k = 0; k < f.m; ++k) {
            if (++digits[static_cast<std::size_t>(k)] < static_cast<int>(f.q)) break;
            digits[static_cast<std::size_t>(k)] = 0;
        }
    }
    return ResidueSequence(f.q, std::move(elems));
}

} // namespace seqcomp
