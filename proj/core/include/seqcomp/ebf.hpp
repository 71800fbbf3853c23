// Functions from Z_q^m to Z_q of the shape
//
//   f(x) = alpha * sum_{k=1}^{w-1} x_{pi(k)} x_{pi(k+1)}
//        + sum_{l=1}^{q-1} sum_{k=1}^{m} c_{l,k} x_k^l + c0
//
// together with their associated sequences of length q^m. The quadratic
// chain runs over a declared width w <= m so the same evaluator serves both
// the full-width and the reduced-width constructions.

#pragma once

#include <cstdint>
#include <vector>

#include "seqcomp/sequence.hpp"

namespace seqcomp {

struct EbfSpec {
    std::uint32_t q = 2;
    int m = 1;
    int alpha = 1;                          // coprime with q, nonzero
    std::vector<int> pi;                    // permutation of {1, ..., w}, w = pi.size()
    std::vector<std::vector<int>> coeffs;   // coeffs[l-1][k-1], l in 1..q-1, k in 1..m
    int c0 = 0;

    int width() const { return static_cast<int>(pi.size()); }

    // Throws std::invalid_argument on any violated constraint.
    void validate() const;

    // Convenience: all-zero coefficient matrix for (q, m).
    static std::vector<std::vector<int>> zero_coeffs(std::uint32_t q, int m);
};

// Little-endian base-q digits of x; digit k is x_{k+1} in the formula above.
std::vector<int> qary_digits(long long x, int m, std::uint32_t q);

int evaluate(const EbfSpec& f, const std::vector<int>& digits);

// Sequence entry i = f applied to the digits of i, i = 0 .. q^m - 1.
ResidueSequence associated_sequence(const EbfSpec& f);

} // namespace seqcomp
