#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seqcomp/builtin.hpp"
#include "seqcomp/correlation.hpp"
#include "seqcomp/ebf.hpp"

using namespace seqcomp;

TEST_CASE("qary_digits") {
    CHECK(qary_digits(5, 2, 3) == std::vector<int>{2, 1});
    CHECK(qary_digits(0, 4, 7) == std::vector<int>{0, 0, 0, 0});
    CHECK(qary_digits(8, 2, 3) == std::vector<int>{2, 2});
    CHECK_THROWS_AS(qary_digits(9, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(qary_digits(-1, 2, 3), std::invalid_argument);
}

TEST_CASE("digit round-trip") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const int m = 3;
        long long n = 1;
        for (int i = 0; i < m; ++i) n *= q;
        for (long long x = 0; x < n; ++x) {
            const auto digits = qary_digits(x, m, q);
            long long back = 0;
            long long place = 1;
            for (int k = 0; k < m; ++k) {
                back += digits[static_cast<std::size_t>(k)] * place;
                place *= q;
            }
            CHECK(back == x);
        }
    }
}

TEST_CASE("evaluate on the published length-25 parameters") {
    const EbfSpec f = builtin::example2_spec();
    // Position 2 has digits (2, 0): 2 + 2*4 + 1*8 + 0*16 = 18 = 3 mod 5.
    CHECK(evaluate(f, {2, 0}) == 3);
    // Position 5 has digits (0, 1): 4 + 4 + 3 + 0 = 11 = 1 mod 5.
    CHECK(evaluate(f, {0, 1}) == 1);
}

TEST_CASE("constant function") {
    // Chain width 1 leaves the quadratic sum empty, so only c0 remains.
    EbfSpec f{7, 3, 1, {1}, EbfSpec::zero_coeffs(7, 3), 4};
    CHECK(evaluate(f, {0, 0, 0}) == 4);
    CHECK(evaluate(f, {6, 0, 5}) == 4);
    const auto seq = associated_sequence(f);
    CHECK(seq.length() == 343);
    for (std::size_t i = 0; i < seq.length(); ++i) CHECK(seq[i] == 4);
}

TEST_CASE("associated sequences of the digit-order fixture") {
    const auto specs = builtin::example1_specs();
    const auto expected = builtin::example1_sequences();
    REQUIRE(specs.size() == expected.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        CHECK(associated_sequence(specs[i]) == expected[i]);
}

TEST_CASE("sequence length is q^m") {
    EbfSpec f{3, 4, 1, {2, 1, 4, 3}, EbfSpec::zero_coeffs(3, 4), 0};
    CHECK(associated_sequence(f).length() == 81);
}

TEST_CASE("constant offset shifts entries and preserves correlation magnitudes") {
    std::mt19937 rng(21);
    EbfSpec f{5, 2, 2, {2, 1}, EbfSpec::zero_coeffs(5, 2), 0};
    for (auto& row : f.coeffs)
        for (auto& c : row) c = static_cast<int>(rng() % 5);
    EbfSpec g = f;
    const int d = 3;
    g.c0 = (f.c0 + d) % 5;

    const auto fs = associated_sequence(f);
    const auto gs = associated_sequence(g);
    for (std::size_t i = 0; i < fs.length(); ++i) CHECK(gs[i] == (fs[i] + d) % 5);

    // AACF magnitudes are unchanged: the difference entering each term
    // cancels the offset exactly.
    for (long tau = 1; tau < static_cast<long>(fs.length()); ++tau)
        CHECK(accf(fs, fs, tau) == accf(gs, gs, tau));
}

TEST_CASE("EbfSpec validation") {
    CHECK_THROWS_AS((EbfSpec{6, 2, 2, {1, 2}, EbfSpec::zero_coeffs(6, 2), 0}).validate(),
                    std::invalid_argument); // gcd(2, 6) != 1
    CHECK_THROWS_AS((EbfSpec{3, 2, 1, {1, 1}, EbfSpec::zero_coeffs(3, 2), 0}).validate(),
                    std::invalid_argument); // not a permutation
    CHECK_THROWS_AS((EbfSpec{3, 2, 1, {1}, EbfSpec::zero_coeffs(3, 3), 0}).validate(),
                    std::invalid_argument); // coeff width mismatch
    CHECK_NOTHROW((EbfSpec{3, 2, 1, {2, 1}, EbfSpec::zero_coeffs(3, 2), 2}).validate());
}
