#include "seqcomp/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace seqcomp {

CyclotomicSum::CyclotomicSum(std::uint32_t order) : q(order), counts(order, 0) {
    if (order < 2 || order > kMaxAlphabet)
        throw std::invalid_argument("CyclotomicSum: order must be in [2, 2^16]");
}

CyclotomicSum::CyclotomicSum(std::uint32_t order, std::vector<long long> c)
    : q(order), counts(std::move(c)) {
    if (order < 2 || order > kMaxAlphabet)
        throw std::invalid_argument("CyclotomicSum: order must be in [2, 2^16]");
    if (counts.size() != order)
        throw std::invalid_argument("CyclotomicSum: counts size must equal order");
}

CyclotomicSum CyclotomicSum::unit(std::uint32_t order, std::uint32_t k) {
    CyclotomicSum s(order);
    s.counts[k % order] = 1;
    return s;
}

void CyclotomicSum::add_term(std::uint32_t k, long long weight) {
    counts[k % q] += weight;
}

void CyclotomicSum::accumulate(const CyclotomicSum& other) {
    if (q != other.q)
        throw std::invalid_argument("CyclotomicSum: alphabet mismatch");
    for (std::uint32_t k = 0; k < q; ++k) counts[k] += other.counts[k];
}

CyclotomicSum cyc_add(const CyclotomicSum& x, const CyclotomicSum& y) {
    CyclotomicSum r = x;
    r.accumulate(y);
    return r;
}

CyclotomicSum cyc_conjugate(const CyclotomicSum& x) {
    CyclotomicSum r(x.q);
    for (std::uint32_t k = 0; k < x.q; ++k) r.counts[(x.q - k) % x.q] = x.counts[k];
    return r;
}

namespace {

using Poly = std::vector<long long>; // constant term first, no trailing zeros

void strip(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division, throws if the division leaves a remainder.
Poly divide_exact(Poly num, const Poly& den) {
    if (den.empty() || den.back() == 0)
        throw std::logic_error("divide_exact: bad divisor");
    Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(num.size()) - 1;
         i >= static_cast<std::ptrdiff_t>(den.size()) - 1; --i) {
        long long c = num[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (c % den.back() != 0)
            throw std::logic_error("divide_exact: inexact division");
        long long f = c / den.back();
        std::size_t shift = static_cast<std::size_t>(i) - (den.size() - 1);
        quot[shift] = f;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

Poly cyclotomic_uncached(std::uint32_t n);

std::mutex cache_mutex;
std::map<std::uint32_t, Poly>& cache() {
    static std::map<std::uint32_t, Poly> c;
    return c;
}

Poly cyclotomic_cached(std::uint32_t n) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(n);
        if (it != cache().end()) return it->second;
    }
    Poly p = cyclotomic_uncached(n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().emplace(n, p);
    return p;
}

Poly cyclotomic_uncached(std::uint32_t n) {
    if (n == 1) return Poly{-1, 1};
    Poly num(n + 1, 0); // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = divide_exact(std::move(num), cyclotomic_cached(d));
        strip(num);
    }
    return num;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    return cyclotomic_cached(n);
}

bool cyc_is_zero(const CyclotomicSum& x) {
    const Poly phi = cyclotomic_cached(x.q);
    Poly r = x.counts;
    // Phi_q is monic, so the remainder stays integral.
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(r.size()) - 1;
         i >= static_cast<std::ptrdiff_t>(phi.size()) - 1; --i) {
        long long f = r[static_cast<std::size_t>(i)];
        if (f == 0) continue;
        std::size_t shift = static_cast<std::size_t>(i) - (phi.size() - 1);
        for (std::size_t j = 0; j < phi.size(); ++j) r[shift + j] -= f * phi[j];
    }
    for (long long c : r)
        if (c != 0) return false;
    return true;
}

std::complex<double> cyc_to_complex(const CyclotomicSum& x) {
    std::complex<double> acc{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(x.q);
    for (std::uint32_t k = 0; k < x.q; ++k) {
        if (x.counts[k] == 0) continue;
        const double ang = step * static_cast<double>(k);
        acc += static_cast<double>(x.counts[k]) *
               std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

bool cyc_is_zero(const CyclotomicSum& x, Engine engine) {
    if (engine == Engine::exact) return cyc_is_zero(x);
    return std::abs(cyc_to_complex(x)) < kFloatZeroTolerance;
}

} // namespace seqcomp
