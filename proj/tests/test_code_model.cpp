#include "doctest.h"

#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "bcc/code_model.hpp"

using namespace bcc;

TEST_CASE("standard generators are delay-free, full-memory, weight-5 taps") {
    GeneratorSet gens = GeneratorSet::standard();
    CHECK_NOTHROW(gens.validate());
    CHECK(gens.constraint_length == 7);
    for (auto g : gens.taps) {
        CHECK((g & 1) == 1);
        CHECK((g >> 6) == 1);
        CHECK(std::popcount(g) == 5);
    }
    GeneratorSet bad = gens;
    bad.taps[0] = 0b0101100;  // no delay-free tap
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("next_state follows the shift register") {
    CHECK(next_state(0, 1) == 1);
    CHECK(next_state(1, 0) == 2);
    CHECK(next_state(63, 1) == 63);
    CHECK_THROWS_AS(next_state(64, 0), std::domain_error);
    CHECK_THROWS_AS(next_state(-1, 0), std::domain_error);
    CHECK_THROWS_AS(next_state(0, 2), std::domain_error);

    // 2-to-1 as a map over (state, input): every state has in-degree 2
    std::map<int, int> indegree;
    for (int s = 0; s < kNumStates; ++s)
        for (int u = 0; u < 2; ++u) ++indegree[next_state(s, u)];
    for (const auto& [s, deg] : indegree) {
        CHECK(s >= 0);
        CHECK(s < kNumStates);
        CHECK(deg == 2);
    }
    CHECK(indegree.size() == std::size_t(kNumStates));
}

TEST_CASE("branch outputs match the tap definitions") {
    CHECK(branch_outputs(0, 0) == std::pair{0, 0});
    CHECK(branch_outputs(0, 1) == std::pair{1, 1});
    // state 2 holds a one two steps back: both generators tap D^2
    CHECK(branch_outputs(2, 0) == std::pair{1, 1});
}

TEST_CASE("trellis structure") {
    Trellis trellis = build_trellis();
    CHECK(trellis.branches().size() == 128);

    const TrellisBranch& b = trellis.branch(0, 1);
    CHECK(b.to_state == 1);
    CHECK(b.out1 == 1);
    CHECK(b.out2 == 1);

    // independent recount of total output weight straight from the taps
    auto parity = [](unsigned x) { return std::popcount(x) & 1; };
    int oracle = 0;
    for (int s = 0; s < kNumStates; ++s) {
        for (int u = 0; u < 2; ++u) {
            unsigned reg = unsigned(u) | (unsigned(s) << 1);
            oracle += parity(reg & 0b1101101) + parity(reg & 0b1001111);
        }
    }
    int total = 0;
    for (const TrellisBranch& br : trellis.branches()) total += br.out1 + br.out2;
    CHECK(total == oracle);
    CHECK(total == 128);  // each generator output is balanced over (state, input)
}

TEST_CASE("encode basics") {
    CHECK(encode({}, false).empty());
    CHECK(encode({}, true).size() == 12);

    BitVec zeros(40, 0);
    for (auto b : encode(zeros, true)) CHECK(b == 0);

    // impulse response: the serialized pairs 11,01,11,11,00,10,11
    BitVec impulse{1, 0, 0, 0, 0, 0, 0};
    BitVec coded = encode(impulse, false);
    BitVec expect{1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1};
    CHECK(coded == expect);
    int weight = 0;
    for (auto b : coded) weight += b;
    CHECK(weight == 10);  // equals the mother code's free distance
}

TEST_CASE("encode is linear over GF(2)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 96;
        BitVec a(n), b(n), x(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng() & 1;
            b[i] = rng() & 1;
            x[i] = a[i] ^ b[i];
        }
        BitVec ca = encode(a, false), cb = encode(b, false), cx = encode(x, false);
        REQUIRE(ca.size() == cx.size());
        for (std::size_t i = 0; i < cx.size(); ++i) CHECK(cx[i] == (ca[i] ^ cb[i]));
    }
}

TEST_CASE("puncture schedules") {
    auto half = PunctureSchedule::for_rate("1/2");
    auto two3 = PunctureSchedule::for_rate("2/3");
    auto three4 = PunctureSchedule::for_rate("3/4");
    auto five6 = PunctureSchedule::for_rate("5/6");

    CHECK(half.mask() == "11");
    CHECK(two3.mask() == "1110");
    CHECK(three4.mask() == "111001");
    CHECK(five6.mask() == "1110011001");
    CHECK(half.period() == 2);
    CHECK(two3.period() == 4);
    CHECK(three4.period() == 6);
    CHECK(five6.period() == 10);

    CHECK(half.rate() == Rational{1, 2});
    CHECK(two3.rate() == Rational{2, 3});
    CHECK(three4.rate() == Rational{3, 4});
    CHECK(five6.rate() == Rational{5, 6});
    CHECK(half.is_unpunctured());
    CHECK_FALSE(two3.is_unpunctured());

    CHECK_THROWS_AS(PunctureSchedule::for_rate("7/8"), std::invalid_argument);
    CHECK_THROWS_AS(PunctureSchedule::from_mask("1"), std::invalid_argument);
    CHECK_THROWS_AS(PunctureSchedule::from_mask("110"), std::invalid_argument);
    CHECK_THROWS_AS(PunctureSchedule::from_mask("0000"), std::invalid_argument);
    CHECK_THROWS_AS(PunctureSchedule::from_mask("11a1"), std::invalid_argument);

    // custom masks are fine anywhere a schedule is accepted
    auto custom = PunctureSchedule::from_mask("110110");
    CHECK(custom.rate() == Rational{3, 4});
}

TEST_CASE("puncture keeps masked positions in order") {
    BitVec bits(12);
    for (int i = 0; i < 12; ++i) bits[std::size_t(i)] = std::uint8_t(i % 2);

    CHECK(puncture(bits, PunctureSchedule::for_rate("1/2")) == bits);

    // rate 3/4 mask over two periods: keep 0,1,2,5,6,7,8,11
    BitVec labeled{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    BitVec kept = puncture(labeled, PunctureSchedule::for_rate("3/4"));
    CHECK(kept == BitVec{0, 1, 2, 5, 6, 7, 8, 11});

    BitVec four{1, 1, 1, 1};
    CHECK(puncture(four, PunctureSchedule::for_rate("2/3")) == BitVec{1, 1, 1});
}

TEST_CASE("punctured length closed form") {
    std::mt19937_64 rng(3);
    for (const char* name : {"1/2", "2/3", "3/4", "5/6"}) {
        auto sch = PunctureSchedule::for_rate(name);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t len = rng() % 200;
            BitVec bits(len, 1);
            CHECK(puncture(bits, sch).size() == sch.kept_count(len));
        }
        std::size_t len = std::size_t(sch.period()) * 7;
        CHECK(sch.kept_count(len) == len * std::size_t(sch.kept_per_period()) /
                                         std::size_t(sch.period()));
    }
}
