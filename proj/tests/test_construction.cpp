#include "qccs/construction.hpp"
#include "qccs/error.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace qccs;

namespace {

// Row d of C_t^k computed pointwise from the member formula, bypassing Polynomial arithmetic.
std::vector<int> member_row(const SeedSpec& seed, int k, int t, int d) {
    const auto& s = seed.f.space();
    const int p = s.p;
    const int n = static_cast<int>(seed.J.size());
    const int unit = s.lambda / p;
    const auto dd = oracle::digits(d, p, n + 1);
    const auto td = oracle::digits(t, p, n + 1);
    std::vector<int> row;
    for (std::int64_t i = 0; i < ipow(p, s.m); ++i) {
        const auto x = oracle::digits(i, p, s.m);
        long long v = oracle::evaluate(seed.f, x);
        for (int a = 0; a < n; ++a) {
            const int xa = x[static_cast<std::size_t>(seed.J[static_cast<std::size_t>(a)])];
            v += static_cast<long long>(k) * unit * dd[static_cast<std::size_t>(a)] * xa;
            v += static_cast<long long>(unit) * td[static_cast<std::size_t>(a)] * xa;
        }
        v += static_cast<long long>(k) * unit * dd[static_cast<std::size_t>(n)] * x[static_cast<std::size_t>(seed.pi_first)];
        v += static_cast<long long>(unit) * td[static_cast<std::size_t>(n)] * x[static_cast<std::size_t>(seed.pi_last)];
        row.push_back(static_cast<int>(v % s.lambda));
    }
    return row;
}

std::vector<int> as_vector(const PhaseSequence& s) {
    return {s.entries().begin(), s.entries().end()};
}

double naive_max(const Code& a, const Code& b, bool skip_zero) {
    const auto L = static_cast<std::int64_t>(a.length());
    double best = 0.0;
    for (std::int64_t tau = 1 - L; tau < L; ++tau) {
        if (skip_zero && tau == 0) {
            continue;
        }
        best = std::max(best, std::abs(oracle::code_accf(a.rows, b.rows, tau)));
    }
    return best;
}

} // namespace

TEST(Descriptor, QccsAndCccShapes) {
    const auto d = FamilyDescriptor::qccs(Params::make(3, 3, 2, 3));
    EXPECT_EQ(d, (FamilyDescriptor{54, 27, 27, 27, 3}));
    const auto c = FamilyDescriptor::ccc(Params::make(5, 2, 0, 10));
    EXPECT_EQ(c, (FamilyDescriptor{5, 5, 25, 0, 10}));
}

TEST(CanonicalSeed, PathAndLayout) {
    const auto seed = canonical_seed(Params::make(3, 4, 1, 6));
    EXPECT_EQ(seed.J, (std::vector<int>{0}));
    EXPECT_EQ(seed.path.free_vars, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(seed.pi_first, 1);
    EXPECT_EQ(seed.pi_last, 3);
    EXPECT_EQ(seed.f.coefficient({0, 1, 1, 0}), 2);
    EXPECT_NO_THROW(check_qccs_layout(seed));
}

TEST(CanonicalSeed, AffineLength) {
    EXPECT_THROW(canonical_seed(Params::make(3, 3, 1, 3), std::vector<int>{1, 2}), InvalidInput);
}

TEST(MakeSeed, RejectsLoop) {
    Polynomial f(FunctionSpace{3, 1, 3});
    f.add_quadratic(0, 0, 1);
    try {
        make_seed(f, {});
        FAIL() << "expected SeedError";
    } catch (const SeedError& e) {
        EXPECT_NE(std::string(e.what()).find("loop present"), std::string::npos);
    }
}

TEST(MakeSeed, ReferenceFunctionOnlyWithMiddleRestricted) {
    EXPECT_THROW(make_seed(oracle::reference_function(), {}), SeedError);
    const auto seed = make_seed(oracle::reference_function(), {1});
    EXPECT_EQ(seed.pi_first, 0);
    EXPECT_EQ(seed.pi_last, 2);
    try {
        check_qccs_layout(seed);
        FAIL() << "expected ConstraintError";
    } catch (const ConstraintError& e) {
        EXPECT_NE(std::string(e.what()).find("J = (0"), std::string::npos);
    }
}

TEST(QccsLayout, PathMustStartAtN) {
    // J = (0) with free path 1-3-2: starts at x1 = x_n.
    Polynomial f(FunctionSpace{3, 4, 3});
    f.add_quadratic(1, 3, 1).add_quadratic(3, 2, 1);
    const auto ok = make_seed(f, {0});
    EXPECT_EQ(ok.path.free_vars, (std::vector<int>{1, 3, 2}));
    EXPECT_NO_THROW(check_qccs_layout(ok));

    Polynomial g(FunctionSpace{3, 4, 3});
    g.add_quadratic(2, 1, 1).add_quadratic(1, 3, 1);
    const auto bad = make_seed(g, {0});
    EXPECT_EQ(bad.pi_first, 2);
    EXPECT_THROW(check_qccs_layout(bad), ConstraintError);
    EXPECT_THROW(build_qccs(bad), ConstraintError);
}

TEST(MemberFunction, MatchesPointwiseFormula) {
    std::mt19937 rng(13);
    for (const auto& params : {Params::make(3, 3, 1, 3), Params::make(3, 3, 1, 6), Params::make(5, 2, 0, 5)}) {
        std::vector<int> affine(static_cast<std::size_t>(params.m));
        std::uniform_int_distribution<int> coeff(0, params.lambda - 1);
        for (auto& a : affine) {
            a = coeff(rng);
        }
        const auto seed = canonical_seed(params, affine, coeff(rng));
        const int M = static_cast<int>(ipow(params.p, params.n + 1));
        for (int k = 1; k < params.p; ++k) {
            for (int t = 0; t < M; ++t) {
                const auto code = build_code(seed, k, t, 1);
                ASSERT_EQ(code.flock_size(), static_cast<std::size_t>(M));
                for (int d = 0; d < M; ++d) {
                    ASSERT_EQ(as_vector(code.rows[static_cast<std::size_t>(d)]), member_row(seed, k, t, d));
                }
            }
        }
    }
}

TEST(MemberFunction, RejectsBadIndices) {
    const auto seed = canonical_seed(Params::make(3, 3, 1, 3));
    EXPECT_THROW(member_function(seed, 0, 0, 0), InvalidInput);
    EXPECT_THROW(member_function(seed, 3, 0, 0), InvalidInput);
    EXPECT_THROW(member_function(seed, 1, 9, 0), InvalidInput);
    EXPECT_THROW(member_function(seed, 1, 0, 9), InvalidInput);
}

TEST(BuildQccs, OrderingAndDistinctMembers) {
    const auto seed = canonical_seed(Params::make(3, 3, 1, 3));
    const auto fam = build_qccs(seed, 2);
    ASSERT_EQ(fam.codes.size(), 18u);
    std::set<std::vector<int>> rows;
    for (std::size_t i = 0; i < fam.codes.size(); ++i) {
        EXPECT_EQ(fam.codes[i].label.k, static_cast<int>(i / 9) + 1);
        EXPECT_EQ(fam.codes[i].label.t, static_cast<int>(i % 9));
        std::set<std::vector<int>> own;
        for (const auto& r : fam.codes[i].rows) {
            own.insert(as_vector(r));
            rows.insert(as_vector(r));
        }
        EXPECT_EQ(own.size(), 9u);
    }
    // Members differ from f only in the linear coefficients of x0 (k d0 + t0), x1 (k d1) and x2 (t1),
    // so the family has exactly 3^3 distinct rows.
    EXPECT_EQ(rows.size(), 27u);
}

TEST(BuildQccs, ThreadCountDoesNotChangeOutput) {
    const auto seed = canonical_seed(Params::make(5, 2, 1, 10));
    const auto a = build_qccs(seed, 1);
    const auto b = build_qccs(seed, 5);
    EXPECT_EQ(a.codes, b.codes);
}

// CCC property checked with the naive complex oracle on small parameters.
TEST(CompleteComplementary, NaiveOracle) {
    std::mt19937 rng(3);
    for (const auto& params : {Params::make(3, 2, 0, 3), Params::make(3, 2, 1, 6), Params::make(5, 2, 1, 5)}) {
        std::vector<int> affine(static_cast<std::size_t>(params.m));
        std::uniform_int_distribution<int> coeff(0, params.lambda - 1);
        for (auto& a : affine) {
            a = coeff(rng);
        }
        const auto seed = canonical_seed(params, affine);
        for (int k = 1; k < params.p; ++k) {
            const auto ccc = build_ccc(seed, k, 1);
            for (std::size_t i = 0; i < ccc.size(); ++i) {
                ASSERT_LT(naive_max(ccc[i], ccc[i], true), 1e-9);
                for (std::size_t j = i + 1; j < ccc.size(); ++j) {
                    ASSERT_LT(naive_max(ccc[i], ccc[j], false), 1e-9);
                }
            }
        }
    }
}

TEST(CompleteComplementary, CrossSetBoundedByLength) {
    const auto params = Params::make(5, 2, 1, 5);
    const auto fam = build_qccs(canonical_seed(params), 0);
    const double L = 25.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < fam.codes.size(); i += 7) {
        for (std::size_t j = i + 1; j < fam.codes.size(); j += 3) {
            if (fam.codes[i].label.k != fam.codes[j].label.k) {
                worst = std::max(worst, naive_max(fam.codes[i], fam.codes[j], false));
            }
        }
    }
    EXPECT_LE(worst, L + 1e-9);
    EXPECT_GT(worst, 0.0);
}

TEST(VerifyFamily, PassesOnGenuineFamily) {
    const auto fam = build_qccs(canonical_seed(Params::make(3, 2, 1, 3)));
    const auto v = verify_family(fam.codes, fam.descriptor.theta_bound);
    EXPECT_TRUE(v.pass);
    ASSERT_EQ(v.per_set.size(), 2u);
    ASSERT_TRUE(v.cross_set);
    EXPECT_LE(v.cross_set->theta2, 9.0 + 1e-6);
    EXPECT_TRUE(v.zero_shift_pass);
}

TEST(VerifyFamily, DetectsCorruptedPhase) {
    auto fam = build_qccs(canonical_seed(Params::make(3, 2, 1, 3)));
    auto& row = fam.codes[4].rows[2];
    row.set(5, (row[5] + 1) % 3);
    const auto v = verify_family(fam.codes, fam.descriptor.theta_bound);
    EXPECT_FALSE(v.pass);
    EXPECT_FALSE(v.per_set[0].pass);
    EXPECT_TRUE(v.per_set[1].pass);
    const auto& peak = v.per_set[0].report.peak;
    EXPECT_TRUE(peak.code_a == 4 || peak.code_b == 4);
}

TEST(VerifyFamily, ExactModeAgrees) {
    const auto fam = build_qccs(canonical_seed(Params::make(3, 2, 1, 6)));
    ReportOptions exact;
    exact.exact = true;
    const auto v = verify_family(fam.codes, fam.descriptor.theta_bound, exact);
    EXPECT_TRUE(v.pass);
    for (const auto& s : v.per_set) {
        EXPECT_EQ(s.report.theta, 0.0);
    }
}
