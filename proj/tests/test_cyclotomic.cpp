#include "qccs/cyclotomic.hpp"
#include "qccs/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qccs;

namespace {

using Poly = std::vector<std::int64_t>;

// Exact zero test for lambda = q or 2q with q an odd prime. For lambda = 2q fold xi^(q+j) = -xi^j,
// then write xi^j = (-1)^j zeta^j with zeta = -xi a primitive q-th root. A combination of the
// q-th roots is zero iff its coefficients are all equal.
bool zero_oracle(const Poly& v, int q, bool doubled) {
    Poly w(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        w[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)];
        if (doubled) {
            w[static_cast<std::size_t>(j)] -= v[static_cast<std::size_t>(j + q)];
            if (j % 2 == 1) {
                w[static_cast<std::size_t>(j)] = -w[static_cast<std::size_t>(j)];
            }
        }
    }
    for (auto x : w) {
        if (x != w.front()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Cyclotomic, KnownPolynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (Poly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), (Poly{1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), (Poly{1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (Poly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(9), (Poly{1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(10), (Poly{1, -1, 1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(15), (Poly{1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, FirstNonUnitCoefficient) {
    const auto phi = cyclotomic_polynomial(105);
    ASSERT_EQ(phi.size(), 49u);
    EXPECT_EQ(phi[7], -2);
    EXPECT_EQ(phi[41], -2);
}

TEST(Cyclotomic, RootsAreRootsOfModulus) {
    for (int lambda : {3, 5, 6, 9, 10, 12, 15, 21}) {
        const CyclotomicRing ring(lambda);
        const auto& phi = ring.modulus();
        std::complex<double> value{0.0, 0.0};
        const auto xi = std::polar(1.0, 2.0 * std::numbers::pi / lambda);
        for (std::size_t j = 0; j < phi.size(); ++j) {
            value += static_cast<double>(phi[j]) * std::pow(xi, static_cast<int>(j));
        }
        EXPECT_LT(std::abs(value), 1e-9) << lambda;
    }
}

TEST(CyclotomicRing, SumOfAllRootsIsZero) {
    for (int lambda : {3, 6, 9, 12, 15}) {
        const CyclotomicRing ring(lambda);
        EXPECT_TRUE(ring.is_zero(Poly(static_cast<std::size_t>(lambda), 4)));
        Poly v(static_cast<std::size_t>(lambda), 0);
        v[0] = 1;
        EXPECT_FALSE(ring.is_zero(v));
    }
}

TEST(CyclotomicRing, ZeroTestMatchesFoldingOracle) {
    std::mt19937 rng(17);
    for (int q : {3, 5, 7}) {
        for (bool doubled : {false, true}) {
            const int lambda = doubled ? 2 * q : q;
            const CyclotomicRing ring(lambda);
            std::uniform_int_distribution<int> coeff(0, 2);
            int zeros = 0;
            for (int trial = 0; trial < 2000; ++trial) {
                Poly v(static_cast<std::size_t>(lambda));
                for (auto& x : v) {
                    x = coeff(rng);
                }
                // Constant vectors are genuine zeros.
                if (trial % 4 == 0) {
                    const int c = coeff(rng);
                    for (int j = 0; j < lambda; ++j) {
                        v[static_cast<std::size_t>(j)] = c;
                    }
                }
                const bool expected = zero_oracle(v, q, doubled);
                ASSERT_EQ(ring.is_zero(v), expected);
                if (expected) {
                    ++zeros;
                    EXPECT_LT(std::abs(ring.to_complex(v)), 1e-9);
                }
            }
            EXPECT_GT(zeros, 100);
        }
    }
}

TEST(CyclotomicRing, ReduceKeepsValue) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int lambda : {6, 9, 12, 15}) {
        const CyclotomicRing ring(lambda);
        for (int trial = 0; trial < 50; ++trial) {
            Poly v(static_cast<std::size_t>(lambda));
            for (auto& x : v) {
                x = coeff(rng);
            }
            const auto r = ring.reduce(v);
            EXPECT_EQ(r.size(), ring.modulus().size() - 1);
            EXPECT_LT(std::abs(ring.to_complex(v) - ring.to_complex(r)), 1e-9);
        }
    }
}

TEST(CyclotomicRing, RejectsNonPositive) {
    EXPECT_THROW(CyclotomicRing(0), InvalidInput);
    EXPECT_THROW(cyclotomic_polynomial(0), InvalidInput);
}
