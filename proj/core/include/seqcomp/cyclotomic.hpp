// Exact arithmetic for sums of q-th roots of unity.
//
// A correlation value over a q-ary alphabet is a sum of terms xi^k where
// xi = exp(2*pi*i/q). Instead of evaluating in floating point, we keep the
// integer count of each power of xi and decide "is this sum zero?" exactly
// by reducing the counts polynomial modulo the q-th cyclotomic polynomial.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace seqcomp {

// Upper limit on alphabet order; keeps count vectors small.
inline constexpr std::uint32_t kMaxAlphabet = 1u << 16;

enum class Engine { exact, floating };

// counts[k] is the integer coefficient of xi^k, 0 <= k < q.
struct CyclotomicSum {
    std::uint32_t q = 2;
    std::vector<long long> counts;

    CyclotomicSum() : counts(2, 0) {}
    explicit CyclotomicSum(std::uint32_t order);
    CyclotomicSum(std::uint32_t order, std::vector<long long> c);

    static CyclotomicSum zero(std::uint32_t order) { return CyclotomicSum(order); }
    // The single term xi^k.
    static CyclotomicSum unit(std::uint32_t order, std::uint32_t k);

    // Accumulate one term xi^k in place.
    void add_term(std::uint32_t k, long long weight = 1);
    void accumulate(const CyclotomicSum& other);

    bool operator==(const CyclotomicSum&) const = default;
};

CyclotomicSum cyc_add(const CyclotomicSum& x, const CyclotomicSum& y);
CyclotomicSum cyc_conjugate(const CyclotomicSum& x);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Computed by exact integer division of x^n - 1 by the product of the
// cyclotomic polynomials of the proper divisors of n; results are cached.
std::vector<long long> cyclotomic_polynomial(std::uint32_t n);

// Exact zero test: reduce sum_k counts[k] x^k modulo Phi_q(x) and check for
// the zero remainder.
bool cyc_is_zero(const CyclotomicSum& x);

// Floating-point evaluation; the independent oracle for cyc_is_zero.
std::complex<double> cyc_to_complex(const CyclotomicSum& x);

inline constexpr double kFloatZeroTolerance = 1e-9;

// Zero test under the selected engine.
bool cyc_is_zero(const CyclotomicSum& x, Engine engine);

} // namespace seqcomp
