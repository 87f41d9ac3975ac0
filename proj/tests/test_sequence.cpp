#include "qccs/error.hpp"
#include "qccs/sequence.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qccs;

TEST(Digits, RoundTrip) {
    for (int p : {3, 5, 7}) {
        for (int m = 1; m <= 4; ++m) {
            const auto L = ipow(p, m);
            for (std::int64_t i = 0; i < L; ++i) {
                const auto d = index_to_digits(i, p, m);
                ASSERT_EQ(d, oracle::digits(i, p, m));
                ASSERT_EQ(digits_to_index(d, p), i);
            }
        }
    }
}

TEST(Digits, MostSignificantFirst) {
    EXPECT_EQ(index_to_digits(1, 3, 3), (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(index_to_digits(9, 3, 3), (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(index_to_digits(17, 3, 3), (std::vector<int>{1, 2, 2}));
}

TEST(Digits, RejectsOutOfRange) {
    EXPECT_THROW(index_to_digits(27, 3, 3), InvalidInput);
    EXPECT_THROW(index_to_digits(-1, 3, 3), InvalidInput);
    EXPECT_THROW(digits_to_index(std::vector<int>{0, 3}, 3), InvalidInput);
}

TEST(PhaseSequence, ZeroIsDistinctFromPhaseZero) {
    PhaseSequence s(3, std::vector<int>{0, PhaseSequence::kZero, 2});
    EXPECT_FALSE(s.is_zero(0));
    EXPECT_TRUE(s.is_zero(1));
    EXPECT_EQ(s.support_size(), 2u);
    s.clear(0);
    EXPECT_EQ(s.support_size(), 1u);
    EXPECT_THROW(PhaseSequence(3, std::vector<int>{3}), InvalidInput);
    EXPECT_THROW(s.set(0, -2), InvalidInput);
}

TEST(SequenceOf, ReferenceFunctionGolden) {
    const auto s = sequence_of(oracle::reference_function());
    ASSERT_EQ(s.size(), 27u);
    EXPECT_EQ(std::vector<int>(s.entries().begin(), s.entries().end()), oracle::reference_sequence());
}

TEST(SequenceOf, MatchesPointwiseOracle) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const FunctionSpace space{5, 3, 10};
        const auto f = oracle::random_polynomial(rng, space, 4);
        const auto s = sequence_of(f);
        for (std::int64_t i = 0; i < 125; ++i) {
            ASSERT_EQ(s[static_cast<std::size_t>(i)], oracle::evaluate(f, oracle::digits(i, 5, 3)));
        }
    }
}

TEST(RestrictedSequence, ReferenceFunctionSlices) {
    const auto f = oracle::reference_function();
    const auto a = restricted_sequence(f, Restriction{{0, 2}, {0, 2}});
    const auto b = restricted_sequence(f, Restriction{{0, 2}, {1, 2}});
    for (std::size_t i = 0; i < 27; ++i) {
        const bool in_a = i == 2 || i == 5 || i == 8;
        const bool in_b = i == 11 || i == 14 || i == 17;
        EXPECT_EQ(a.is_zero(i), !in_a) << i;
        EXPECT_EQ(b.is_zero(i), !in_b) << i;
    }
    EXPECT_EQ(a[2], 0);
    EXPECT_EQ(a[5], 0);
    EXPECT_EQ(a[8], 1);
    EXPECT_EQ(b[11], 2);
    EXPECT_EQ(b[14], 2);
    EXPECT_EQ(b[17], 0);
}

TEST(RestrictedSequence, SupportsPartitionTheIndexSet) {
    std::mt19937 rng(4);
    const int p = 3;
    const int m = 4;
    const auto f = oracle::random_polynomial(rng, FunctionSpace{p, m, 6}, 3);
    const std::vector<int> J{1, 3};
    std::vector<int> hits(81, 0);
    std::vector<PhaseSequence> parts;
    for (std::int64_t ci = 0; ci < 9; ++ci) {
        const Restriction r{J, oracle::digits(ci, p, 2)};
        const auto s = restricted_sequence(f, r);
        EXPECT_EQ(s.support_size(), 9u);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!s.is_zero(i)) {
                ++hits[i];
                const auto d = oracle::digits(static_cast<std::int64_t>(i), p, m);
                EXPECT_EQ(d[1], r.c[0]);
                EXPECT_EQ(d[3], r.c[1]);
            }
        }
        parts.push_back(s);
    }
    for (int h : hits) {
        EXPECT_EQ(h, 1);
    }
    EXPECT_EQ(superpose(parts), sequence_of(f));
}

TEST(Superpose, RejectsOverlapAndMismatch) {
    PhaseSequence a(3, std::vector<int>{0, PhaseSequence::kZero});
    PhaseSequence b(3, std::vector<int>{1, 2});
    EXPECT_THROW(superpose(std::vector<PhaseSequence>{a, b}), InvalidSuperposition);
    PhaseSequence c(6, std::vector<int>{PhaseSequence::kZero, 1});
    EXPECT_THROW(superpose(std::vector<PhaseSequence>{a, c}), InvalidSuperposition);
    EXPECT_THROW(superpose(std::vector<PhaseSequence>{}), InvalidSuperposition);
}
