#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "seqcomp/builtin.hpp"
#include "seqcomp/constructions.hpp"
#include "seqcomp/seeds.hpp"

using namespace seqcomp;

TEST_CASE("interleave") {
    CHECK(interleave(ResidueSequence(4, {0, 1}), ResidueSequence(4, {2, 3})) ==
          ResidueSequence(4, {0, 2, 1, 3}));
    CHECK(interleave(ResidueSequence(2, {0}), ResidueSequence(2, {1})) ==
          ResidueSequence(2, {0, 1}));
    const ResidueSequence a(3, {1, 2});
    CHECK(interleave(a, a) == ResidueSequence(3, {1, 1, 2, 2}));
    CHECK_THROWS_AS(interleave(a, ResidueSequence(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(interleave(a, ResidueSequence(4, {1, 2})), std::invalid_argument);
}

TEST_CASE("concat") {
    CHECK(concat(ResidueSequence(3, {0, 1}), ResidueSequence(3, {2})) ==
          ResidueSequence(3, {0, 1, 2}));
    CHECK(concat(ResidueSequence(2, {0}), ResidueSequence(2, {0})) ==
          ResidueSequence(2, {0, 0}));
    CHECK_THROWS_AS(concat(ResidueSequence(2, {0}), ResidueSequence(3, {0})),
                    std::invalid_argument);
}

TEST_CASE("phi alternates shifted blocks") {
    CHECK(phi(ResidueSequence(3, {0, 1, 2}), ResidueSequence(3, {0}),
              ResidueSequence(3, {1})) == ResidueSequence(3, {0, 2, 2}));
    // Zero shift sequence: plain a | b.
    CHECK(phi(ResidueSequence(2, {0, 0}), ResidueSequence(2, {0, 1}),
              ResidueSequence(2, {1, 1})) == ResidueSequence(2, {0, 1, 1, 1}));
    // Single block: only a, shifted.
    CHECK(phi(ResidueSequence(2, {1}), ResidueSequence(2, {0, 1}),
              ResidueSequence(2, {0, 0})) == ResidueSequence(2, {1, 0}));
    CHECK_THROWS_AS(phi(ResidueSequence(2, {0}), ResidueSequence(3, {0}),
                        ResidueSequence(3, {0})),
                    std::invalid_argument);
}

TEST_CASE("negate_set") {
    const SequenceSet s(3, {ResidueSequence(3, {0, 1, 2})});
    CHECK(negate_set(s).row(0) == ResidueSequence(3, {0, 2, 1}));
    CHECK(negate_set(negate_set(s)) == s);
    // Additive inverse mod 2 is the identity.
    const SequenceSet b(2, {ResidueSequence(2, {0, 1})});
    CHECK(negate_set(b) == b);
}

TEST_CASE("CSS construction reproduces the published length-25 example") {
    const SequenceSet built =
        build_css_theorem1(builtin::example2_spec(), VerifyPolicy::always);
    CHECK(built == builtin::example2_css());
    CHECK(is_css(built));

    // The coefficient column printed next to the published rows, (3,4,1,3),
    // yields a different CSS: rows agree wherever x2 < 3 and differ by a
    // constant offset of 4 on the x2 = 3 and x2 = 4 blocks.
    EbfSpec printed = builtin::example2_spec();
    printed.coeffs = {{1, 3}, {2, 4}, {1, 1}, {0, 3}};
    const SequenceSet other = build_css_theorem1(printed, VerifyPolicy::always);
    CHECK(is_css(other));
    CHECK(other != built);
    for (std::size_t n = 0; n < built.size(); ++n)
        for (std::size_t i = 0; i < built.length(); ++i) {
            const int diff = (built.row(n)[i] - other.row(n)[i] + 5) % 5;
            CHECK(diff == (i / 5 >= 3 ? 4 : 0));
        }
}

TEST_CASE("CSS construction, small cases") {
    EbfSpec tiny{2, 1, 1, {1}, EbfSpec::zero_coeffs(2, 1), 0};
    const SequenceSet s = build_css_theorem1(tiny, VerifyPolicy::always);
    CHECK(s.size() == 2);
    CHECK(s.length() == 2);

    // Ternary shape with only l in {1, 2} used.
    EbfSpec ternary{3, 2, 1, {2, 1}, {{1, 0}, {2, 2}}, 1};
    CHECK(is_css(build_css_theorem1(ternary, VerifyPolicy::always)));

    EbfSpec partial{3, 3, 1, {1, 2}, EbfSpec::zero_coeffs(3, 3), 0};
    CHECK_THROWS_AS(build_css_theorem1(partial, VerifyPolicy::never),
                    std::invalid_argument); // width must equal m
}

TEST_CASE("ZCCS construction reproduces the published 9-set family") {
    const SetFamily built =
        build_zccs_theorem2(builtin::table1_params(), VerifyPolicy::never);
    CHECK(built == builtin::table1_family());
}

TEST_CASE("ZCCS construction, binary (4,2,4,2) case") {
    Theorem2Params p;
    p.q = 2;
    p.m = 2;
    p.v = 1;
    p.alpha = 1;
    p.beta = 1;
    p.pi = {1};
    p.coeffs = {{0, 0}};
    const SetFamily f = build_zccs_theorem2(p, VerifyPolicy::never);
    CHECK(f.size() == 4);
    CHECK(f.flock_size() == 2);
    CHECK(f.length() == 4);
    CHECK(zcz_width(f) == 2);
}

TEST_CASE("ZCCS construction with v = 0 yields a CCC") {
    Theorem2Params p;
    p.q = 3;
    p.m = 2;
    p.v = 0;
    p.alpha = 1;
    p.beta = 2;
    p.pi = {2, 1};
    p.coeffs = {{1, 0}, {0, 2}};
    p.c0 = 1;
    CHECK(is_ccc(build_zccs_theorem2(p, VerifyPolicy::never)));
}

TEST_CASE("ZCCS parameter validation") {
    Theorem2Params p;
    p.q = 4;
    p.m = 2;
    p.v = 0;
    p.alpha = 1;
    p.beta = 2; // gcd(2, 4) != 1
    p.pi = {1, 2};
    p.coeffs = EbfSpec::zero_coeffs(4, 2);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.beta = 3;
    CHECK_NOTHROW(p.validate());
    p.v = 2; // v = m is rejected: the formula has no variables left
    p.pi = {};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("interleaving a CCC gives even-shift orthogonal ESCSSs") {
    const SetFamily ccc = seed_ccc(2);
    const auto sets = interleave_escss_theorem3(ccc, VerifyPolicy::always);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].size() == 1);
    CHECK(sets[0].length() == 4);
    for (const auto& s : sets) CHECK(is_escss(s));
    CHECK(even_shift_orthogonal(sets[0], sets[1]));

    // Half-shift identity: correlation at even shift 2t equals the source
    // family correlation at t.
    for (std::size_t m1 = 0; m1 < 2; ++m1)
        for (std::size_t m2 = 0; m2 < 2; ++m2)
            for (long t = -1; t <= 1; ++t)
                CHECK(set_accf(sets[m1], sets[m2], 2 * t) ==
                      set_accf(ccc.set(m1), ccc.set(m2), t));
}

TEST_CASE("interleave construction rejects bad inputs") {
    const SetFamily not_ccc({SequenceSet(
        2, {ResidueSequence(2, {0, 0}), ResidueSequence(2, {0, 0})})});
    CHECK_THROWS_AS(interleave_escss_theorem3(not_ccc, VerifyPolicy::always),
                    std::invalid_argument); // M = 1 is odd
}

TEST_CASE("concatenation MOCSS from degenerate inputs") {
    // Length-1 ESCSSs; with a single unit-magnitude row the shift-0 cross
    // sum could never vanish, so the smallest orthogonal pair has 2 rows:
    // 1 + xi^-1 = 0 over q = 2.
    const SequenceSet p(2, {ResidueSequence(2, {0}), ResidueSequence(2, {0})});
    const SequenceSet q(2, {ResidueSequence(2, {0}), ResidueSequence(2, {1})});
    const SetFamily ccc = seed_ccc(2);
    const SetFamily mocss = mocss_lemma4(p, q, ccc, VerifyPolicy::always);
    CHECK(mocss.size() == 2);
    CHECK(mocss.flock_size() == 4);
    CHECK(mocss.length() == 2);
    CHECK(is_mocss(mocss));
}

TEST_CASE("concatenation MOCSS matches the CCC product constituents") {
    const SetFamily a = seed_ccc(2);
    const auto inter = interleave_escss_theorem3(a, VerifyPolicy::never);
    const SetFamily product = ccc_theorem4(a, a, VerifyPolicy::never);
    const SetFamily part =
        mocss_lemma4(inter[0], inter[1], a, VerifyPolicy::never);
    for (std::size_t k = 0; k < part.size(); ++k)
        CHECK(product.set(k) == part.set(k));
}

TEST_CASE("CCC product") {
    const SetFamily tiny = seed_ccc(1);
    const SetFamily small = seed_ccc(2);

    const SetFamily p1 = ccc_theorem4(tiny, tiny, VerifyPolicy::always);
    CHECK(p1.size() == 2);
    CHECK(p1.length() == 2);
    CHECK(is_ccc(p1));

    const SetFamily p2 = ccc_theorem4(small, small, VerifyPolicy::always);
    CHECK(p2.size() == 2);
    CHECK(p2.length() == 8);
    CHECK(is_ccc(p2));
}

TEST_CASE("CCC product rejects mismatched alphabets") {
    const SetFamily binary = seed_ccc(2);
    Theorem2Params p;
    p.q = 3;
    p.m = 2;
    p.v = 0;
    p.alpha = 1;
    p.beta = 1;
    p.pi = {1, 2};
    p.coeffs = EbfSpec::zero_coeffs(3, 2);
    const SetFamily ternary = build_zccs_theorem2(p, VerifyPolicy::never);
    CHECK_THROWS_AS(ccc_theorem4(binary, ternary, VerifyPolicy::never),
                    std::invalid_argument);
}

TEST_CASE("block MOCSS construction, binary cases") {
    const SetFamily tiny = seed_ccc(1);
    const auto result = mocss_theorem5(tiny, tiny);
    CHECK(result.family.size() == 2);
    CHECK(result.family.flock_size() == 4);
    CHECK(result.family.length() == 2);
    CHECK(is_mocss(result.family));
    // For q = 2 the additive inverse is the identity and cannot work; the
    // symbol-negation reading is the one that verifies.
    CHECK(result.used == NegationMode::symbol_negation);
    CHECK_THROWS_AS(
        mocss_theorem5(tiny, tiny, NegationMode::additive_inverse, VerifyPolicy::always),
        VerificationError);
}

TEST_CASE("block MOCSS construction accepts unequal lengths") {
    const auto result = mocss_theorem5(seed_ccc(1), seed_ccc(2),
                                       NegationMode::automatic, VerifyPolicy::never);
    CHECK(result.family.size() == 2);
    CHECK(result.family.flock_size() == 4);
    CHECK(result.family.length() == 3);
    CHECK(is_mocss(result.family));
}

TEST_CASE("block MOCSS construction rejects mismatched alphabets") {
    Theorem2Params p;
    p.q = 3;
    p.m = 2;
    p.v = 0;
    p.alpha = 1;
    p.beta = 1;
    p.pi = {1, 2};
    p.coeffs = EbfSpec::zero_coeffs(3, 2);
    const SetFamily ternary = build_zccs_theorem2(p, VerifyPolicy::never);
    CHECK_THROWS_AS(mocss_theorem5(seed_ccc(2), ternary, NegationMode::automatic,
                                   VerifyPolicy::never),
                    std::invalid_argument);
}

TEST_CASE("constructions are deterministic") {
    const SetFamily a = build_zccs_theorem2(builtin::table1_params(), VerifyPolicy::never);
    const SetFamily b = build_zccs_theorem2(builtin::table1_params(), VerifyPolicy::never);
    CHECK(a == b);
}

TEST_CASE("randomized CSS property, sampled parameters") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t q = 2 + rng() % 7;
        int m = 1 + static_cast<int>(rng() % 3);
        long long size = 1;
        for (int i = 0; i < m; ++i) size *= q;
        if (size > 512) { m = 2; }
        EbfSpec f{q, m, 1, {}, EbfSpec::zero_coeffs(q, m), static_cast<int>(rng() % q)};
        // random alpha coprime with q
        do { f.alpha = 1 + static_cast<int>(rng() % (q - 1)); } while (std::gcd<unsigned>(f.alpha, q) != 1);
        f.pi.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) f.pi[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(f.pi.begin(), f.pi.end(), rng);
        for (auto& row : f.coeffs)
            for (auto& c : row) c = static_cast<int>(rng() % q);
        CHECK(is_css(build_css_theorem1(f, VerifyPolicy::never)));
    }
}
