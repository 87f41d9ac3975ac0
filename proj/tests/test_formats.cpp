#include "qccs/construction.hpp"
#include "qccs/error.hpp"
#include "qccs/formats.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <random>

using namespace qccs;
using nlohmann::json;

TEST(PolynomialJson, RoundTrip) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = oracle::random_polynomial(rng, FunctionSpace{5, 3, 10}, 3);
        const auto text = formats::polynomial_to_json(f);
        EXPECT_EQ(formats::polynomial_from_json(text), f);
        EXPECT_EQ(formats::polynomial_to_json(formats::polynomial_from_json(text)), text);
    }
}

TEST(PolynomialJson, SchemaVersionOptionalOnRead) {
    const auto f = formats::polynomial_from_json(
        R"({"p":3,"m":3,"lambda":3,"terms":[{"exp":[1,0,1],"coeff":1},{"exp":[0,2,0],"coeff":2}]})");
    EXPECT_EQ(f.coefficient({1, 0, 1}), 1);
    EXPECT_EQ(f.coefficient({0, 2, 0}), 2);
    EXPECT_EQ(json::parse(formats::polynomial_to_json(f))["schema_version"], 1);
}

TEST(PolynomialJson, Malformed) {
    EXPECT_THROW(formats::polynomial_from_json(R"({"p":3,"m":3)"), ParseError);
    EXPECT_THROW(formats::polynomial_from_json(R"({"p":4,"m":3,"lambda":4,"terms":[]})"), ParseError);
    EXPECT_THROW(formats::polynomial_from_json(R"({"p":3,"m":2,"lambda":3,"terms":[{"exp":[1],"coeff":1}]})"),
                 ParseError);
    EXPECT_THROW(formats::polynomial_from_json(R"({"p":3,"m":2,"lambda":3,"terms":[{"exp":[1,0],"coeff":5}]})"),
                 ParseError);
    EXPECT_THROW(formats::polynomial_from_json(R"({"schema_version":9,"p":3,"m":2,"lambda":3,"terms":[]})"),
                 ParseError);
}

TEST(SequenceFormats, ZeroSurvivesRoundTrip) {
    std::mt19937 rng(3);
    const auto s = oracle::random_sequence(rng, 6, 40, 0.3);
    EXPECT_EQ(formats::sequence_from_json(formats::sequence_to_json(s)), s);
    const auto csv = formats::sequence_to_csv(s);
    EXPECT_EQ(csv.rfind("# schema_version,1\nindex,is_zero,phase\n", 0), 0u);
    EXPECT_EQ(formats::sequence_from_csv(csv, 6), s);
}

TEST(SequenceFormats, CsvRowsDistinguishZeroFromPhaseZero) {
    const PhaseSequence s(3, std::vector<int>{0, PhaseSequence::kZero});
    EXPECT_EQ(formats::sequence_to_csv(s), "# schema_version,1\nindex,is_zero,phase\n0,0,0\n1,1,\n");
    EXPECT_THROW(formats::sequence_from_csv("index,is_zero,phase\n0,0,3\n", 3), ParseError);
    EXPECT_THROW(formats::sequence_from_csv("idx\n", 3), ParseError);
    EXPECT_THROW(formats::sequence_from_csv("index,is_zero,phase\n1,0,0\n", 3), ParseError);
}

TEST(Reports, JsonFields) {
    const auto fam = build_qccs(canonical_seed(Params::make(3, 2, 1, 3)));
    const auto report = family_report(fam.codes);
    const auto j = json::parse(formats::report_to_json(report));
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_NEAR(j["theta"].get<double>(), report.theta, 1e-12);
    EXPECT_EQ(j["argmax"]["codes"][0], report.peak.code_a);
    EXPECT_EQ(j["argmax"]["tau"], report.peak.tau);

    const auto v = json::parse(formats::verification_to_json(verify_family(fam.codes, 9)));
    EXPECT_TRUE(v["pass"].get<bool>());
    EXPECT_TRUE(v["failures"].empty());
    EXPECT_EQ(v["per_set"].size(), 2u);

    const auto b = json::parse(formats::bounds_to_json(optimality(9, 9, 27, 0.0)));
    EXPECT_TRUE(b["liu_bound"].is_null());
    EXPECT_EQ(b["classification"], "optimal");
}

TEST(Reports, ShiftProfileCsv) {
    const auto fam = build_ccc_family(canonical_seed(Params::make(3, 1, 0, 3)), 1);
    const auto csv = formats::shift_profile_to_csv(shift_profile(fam.codes[0], fam.codes[1]));
    EXPECT_EQ(csv.rfind("# schema_version,1\ntau,|value|\n-2,", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(FamilyFormats, JsonAndCsvRoundTrip) {
    for (const auto& params : {Params::make(3, 2, 1, 6), Params::make(5, 2, 0, 5)}) {
        const auto fam = build_qccs(canonical_seed(params, std::vector<int>(static_cast<std::size_t>(params.m), 1)));
        const auto text = formats::family_to_json(fam);
        const auto back = formats::family_from_json(text);
        EXPECT_EQ(back.codes, fam.codes);
        EXPECT_EQ(back.seed.f, fam.seed.f);
        EXPECT_EQ(back.descriptor, fam.descriptor);
        EXPECT_EQ(formats::family_to_json(back), text);

        const auto csv = formats::family_to_csv(fam);
        const auto from_csv = formats::family_from_csv(csv);
        EXPECT_EQ(from_csv.codes, fam.codes);
        EXPECT_EQ(from_csv.seed.path.free_vars, fam.seed.path.free_vars);
        EXPECT_EQ(formats::family_to_csv(from_csv), csv);
    }
}

TEST(FamilyFormats, CccKind) {
    const auto fam = build_ccc_family(canonical_seed(Params::make(3, 2, 0, 3)), 2);
    const auto back = formats::family_from_json(formats::family_to_json(fam));
    EXPECT_EQ(back.kind, FamilyKind::ccc);
    EXPECT_EQ(back.codes, fam.codes);
}

TEST(FamilyFormats, RejectsInconsistentFiles) {
    const auto fam = build_qccs(canonical_seed(Params::make(3, 2, 1, 3)));
    const auto text = formats::family_to_json(fam);
    EXPECT_THROW(formats::family_from_json(text.substr(0, text.size() / 2)), ParseError);

    auto j = json::parse(text);
    j["K"] = 17;
    EXPECT_THROW(formats::family_from_json(j.dump()), ParseError);

    j = json::parse(text);
    j["codes"].erase(j["codes"].begin());
    EXPECT_THROW(formats::family_from_json(j.dump()), ParseError);

    j = json::parse(text);
    j["codes"][0]["rows"][0][0] = -1;
    EXPECT_THROW(formats::family_from_json(j.dump()), ParseError);

    j = json::parse(text);
    j["codes"][0]["rows"][0][0] = 3;
    EXPECT_THROW(formats::family_from_json(j.dump()), ParseError);

    j = json::parse(text);
    j.erase("schema_version");
    EXPECT_THROW(formats::family_from_json(j.dump()), ParseError);

    auto csv = formats::family_to_csv(fam);
    EXPECT_THROW(formats::family_from_csv(csv.substr(0, csv.size() - 10)), ParseError);
}
