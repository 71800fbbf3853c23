#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seqcomp/builtin.hpp"
#include "seqcomp/correlation.hpp"

using namespace seqcomp;

namespace {

ResidueSequence random_sequence(std::mt19937& rng, std::uint32_t q, std::size_t len) {
    std::vector<int> elems(len);
    for (auto& e : elems) e = static_cast<int>(rng() % q);
    return ResidueSequence(q, std::move(elems));
}

} // namespace

TEST_CASE("accf, pinned cases") {
    const ResidueSequence zeros(2, {0, 0});
    CHECK(accf(zeros, zeros, 1) == CyclotomicSum(2, {1, 0}));

    const ResidueSequence a(2, {0, 1});
    CHECK(accf(a, zeros, 0) == CyclotomicSum(2, {1, 1}));
    CHECK(cyc_is_zero(accf(a, zeros, 0)));

    // Zero-shift energy is L for any sequence.
    std::mt19937 rng(1);
    const auto s = random_sequence(rng, 5, 17);
    const auto e = accf(s, s, 0);
    CHECK(e.counts[0] == 17);
    for (std::size_t k = 1; k < 5; ++k) CHECK(e.counts[k] == 0);

    CHECK(cyc_is_zero(accf(a, a, 5)));   // out of range => empty sum
    CHECK(cyc_is_zero(accf(a, a, -5)));
    CHECK_THROWS_AS(accf(a, random_sequence(rng, 3, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(accf(a, ResidueSequence(2, {0, 0, 0}), 0), std::invalid_argument);
}

TEST_CASE("conjugate symmetry on random pairs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t q = 2 + rng() % 7;
        const std::size_t len = 1 + rng() % 32;
        const auto a = random_sequence(rng, q, len);
        const auto b = random_sequence(rng, q, len);
        for (long tau = -static_cast<long>(len) + 1; tau < static_cast<long>(len); ++tau)
            CHECK(accf(b, a, -tau) == cyc_conjugate(accf(a, b, tau)));
    }
}

TEST_CASE("correlation_profile satisfies the symmetry invariant") {
    std::mt19937 rng(5);
    const auto a = random_sequence(rng, 4, 9);
    const auto b = random_sequence(rng, 4, 9);
    const auto profile = correlation_profile(a, b);
    REQUIRE(profile.values.size() == 17);
    const auto mirrored = correlation_profile(b, a);
    for (long tau = -8; tau <= 8; ++tau)
        CHECK(mirrored.at(-tau) == cyc_conjugate(profile.at(tau)));
}

TEST_CASE("set_accf energy and zone values") {
    const SetFamily table1 = builtin::table1_family();
    const SequenceSet& s0 = table1.set(0);

    const auto energy = set_accf(s0, s0, 0);
    CHECK(energy.counts[0] == 81); // N * L = 3 * 27
    CHECK(energy.counts[1] == 0);
    CHECK(energy.counts[2] == 0);

    CHECK(cyc_is_zero(set_accf(s0, s0, 3)));
    CHECK(cyc_is_zero(set_accf(s0, table1.set(1), 0)));
    CHECK_THROWS_AS(set_accf(s0, SequenceSet(3, {s0.row(0)}), 0), std::invalid_argument);
}

TEST_CASE("is_css") {
    CHECK(is_css(SequenceSet(2, {ResidueSequence(2, {0, 0}), ResidueSequence(2, {0, 1})})));
    CHECK(is_css(builtin::example2_css()));
    CHECK_FALSE(is_css(SequenceSet(2, {ResidueSequence(2, {0, 0}), ResidueSequence(2, {0, 0})})));
}

TEST_CASE("is_escss") {
    // Any CSS is an ESCSS.
    const SequenceSet golay(2, {ResidueSequence(2, {0, 0}), ResidueSequence(2, {0, 1})});
    CHECK(is_escss(golay));
    // Single all-zero row of length 3 fails at shift 2.
    CHECK_FALSE(is_escss(SequenceSet(2, {ResidueSequence(2, {0, 0, 0})})));
}

TEST_CASE("zcz_width on the published ZCCS") {
    const SetFamily table1 = builtin::table1_family();
    CHECK(zcz_width(table1) == 9);
}

TEST_CASE("zcz_width sentinel when shift-zero cross-correlation fails") {
    // Two identical sets correlate to N*L at shift 0, so no ZCCS of any width.
    const SequenceSet s(2, {ResidueSequence(2, {0, 0}), ResidueSequence(2, {0, 1})});
    CHECK(zcz_width(SetFamily({s, s})) == 0);
}

TEST_CASE("classify on the published ZCCS") {
    const auto report = classify(builtin::table1_family());
    CHECK(report.zcz_width == 9);
    CHECK_FALSE(report.is_mocss);
    CHECK_FALSE(report.is_ccc);
    CHECK(report.feng_optimal); // 9 == 3 * floor(27 / 9)
}

TEST_CASE("classify degenerate 1x1 family") {
    const SetFamily unit({SequenceSet(2, {ResidueSequence(2, {0})})});
    const auto report = classify(unit);
    CHECK(report.zcz_width == 1);
    CHECK(report.is_mocss);
    CHECK(report.is_ccc);
}

TEST_CASE("exact and float classifiers agree on the published family") {
    const SetFamily table1 = builtin::table1_family();
    CHECK(zcz_width(table1, Engine::exact) == zcz_width(table1, Engine::floating));
    CHECK(is_css(table1.set(0), Engine::floating) == is_css(table1.set(0), Engine::exact));
}
