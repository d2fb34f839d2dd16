#include <gtest/gtest.h>

#include "oracles.hpp"
#include "realbundles/error.hpp"
#include "realbundles/topology.hpp"

using namespace rb;

namespace {

std::string error_code(auto&& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e.code();
    }
    return "";
}

std::string error_message(auto&& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

bool valid_curve_by_definition(int g, CurveKind k, int a) {
    switch (k) {
    case CurveKind::Type0: return a == 0;
    case CurveKind::TypeI: return a >= 1 && a <= g + 1 && (g + 1 - a) % 2 == 0;
    case CurveKind::TypeII: return a >= 1 && a <= g;
    }
    return false;
}

} // namespace

TEST(Topology, ValidateCurveExamples) {
    EXPECT_NO_THROW(validate_curve({2, CurveKind::TypeI, 3}));
    EXPECT_EQ(error_code([] { validate_curve({2, CurveKind::TypeI, 2}); }), "parity");
    EXPECT_NE(error_message([] { validate_curve({2, CurveKind::TypeII, 3}); }).find("a <= g violated"),
              std::string::npos);
    EXPECT_THROW(validate_curve({-1, CurveKind::Type0, 0}), ValidationError);
    EXPECT_THROW(validate_curve({3, CurveKind::Type0, 1}), ValidationError);
}

TEST(Topology, EnumerateCurvesMatchesDefinition) {
    for (int g = 0; g <= 8; ++g) {
        std::vector<CurveTopology> expect;
        for (auto k : {CurveKind::Type0, CurveKind::TypeI, CurveKind::TypeII})
            for (int a = 0; a <= g + 2; ++a)
                if (valid_curve_by_definition(g, k, a))
                    expect.push_back({g, k, a});
        EXPECT_EQ(enumerate_curves(g), expect) << g;
        for (auto k : {CurveKind::Type0, CurveKind::TypeI, CurveKind::TypeII})
            for (int a = 0; a <= g + 2; ++a)
                EXPECT_EQ(curve_violations({g, k, a}).empty(), valid_curve_by_definition(g, k, a));
    }
}

TEST(Topology, EnumerateRealBundlesExamples) {
    auto bundles = enumerate_real_bundles({2, CurveKind::TypeI, 3}, 2, 1);
    std::vector<std::string> patterns;
    for (const auto& b : bundles)
        patterns.push_back(w1_to_string(b.w1));
    EXPECT_EQ(patterns, oracle::bundles_by_parity(3, 1));
    EXPECT_EQ(patterns, (std::vector<std::string>{"001", "010", "100", "111"}));

    auto one = enumerate_real_bundles({2, CurveKind::TypeI, 1}, 2, 1);
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(w1_to_string(one[0].w1), "1");

    EXPECT_TRUE(enumerate_real_bundles({3, CurveKind::Type0, 0}, 2, 1).empty());
    EXPECT_EQ(enumerate_real_bundles({3, CurveKind::Type0, 0}, 2, 2).size(), 1U);
}

TEST(Topology, BundleCountIsPowerOfTwo) {
    for (int g = 0; g <= 7; ++g)
        for (const auto& c : enumerate_curves(g))
            for (long d = -3; d <= 3; ++d)
                for (int r : {1, 2, 3}) {
                    auto bundles = enumerate_real_bundles(c, r, d);
                    if (c.fixed_circles == 0)
                        continue;
                    EXPECT_EQ(bundles.size(), 1U << (c.fixed_circles - 1));
                    std::vector<std::string> got;
                    for (const auto& b : bundles) {
                        EXPECT_NO_THROW(validate_real_bundle(c, b));
                        got.push_back(w1_to_string(b.w1));
                    }
                    EXPECT_EQ(got, oracle::bundles_by_parity(c.fixed_circles, d));
                }
}

TEST(Topology, RealBundleValidation) {
    CurveTopology c{2, CurveKind::TypeI, 3};
    EXPECT_EQ(error_code([&] { validate_real_bundle(c, {2, 2, w1_from_string("100")}); }), "parity");
    EXPECT_EQ(error_code([&] { validate_real_bundle(c, {2, 1, w1_from_string("10")}); }), "w1");
    EXPECT_EQ(error_code([&] { validate_real_bundle(c, {0, 1, w1_from_string("100")}); }), "rank");
    EXPECT_THROW(w1_from_string("10x"), ValidationError);
}

TEST(Topology, QuaternionicExamples) {
    CurveTopology c{3, CurveKind::TypeI, 2};
    EXPECT_NO_THROW(validate_quaternionic(c, 2, 0));
    EXPECT_EQ(error_code([&] { validate_quaternionic(c, 2, 1); }), "parity");
    EXPECT_EQ(error_code([&] { validate_quaternionic(c, 1, 0); }), "real-points");
    EXPECT_NO_THROW(validate_quaternionic({3, CurveKind::Type0, 0}, 1, 0));
    EXPECT_NO_THROW(validate_quaternionic({2, CurveKind::Type0, 0}, 1, 1));
}

TEST(Topology, DecompositionExamples) {
    EXPECT_EQ(decompose_surface({2, CurveKind::TypeI, 3}), (SurfaceDecomposition{0, 3, 3}));
    EXPECT_EQ(decompose_surface({2, CurveKind::TypeII, 1}), (SurfaceDecomposition{0, 3, 1}));
    EXPECT_EQ(decompose_surface({3, CurveKind::TypeII, 2}), (SurfaceDecomposition{0, 4, 2}));
    EXPECT_EQ(decompose_surface({4, CurveKind::TypeI, 1}), (SurfaceDecomposition{2, 1, 1}));
    EXPECT_EQ(error_code([] { decompose_surface({3, CurveKind::Type0, 0}); }), "real-points");
}

TEST(Topology, DecompositionInvariants) {
    for (int g = 0; g <= 9; ++g)
        for (const auto& c : enumerate_curves(g)) {
            if (c.fixed_circles == 0)
                continue;
            auto all = all_decompositions(c);
            ASSERT_FALSE(all.empty());
            EXPECT_EQ(all.front(), decompose_surface(c));
            for (const auto& d : all) {
                EXPECT_TRUE(is_valid_decomposition(c, d));
                EXPECT_EQ(2 * d.half_genus + d.boundary_circles - 1, g);
                EXPECT_EQ(d.identity_glued, c.fixed_circles);
                if (c.kind == CurveKind::TypeI)
                    EXPECT_EQ(d.boundary_circles, c.fixed_circles);
                else
                    EXPECT_GT(d.boundary_circles, c.fixed_circles);
            }
            if (c.kind == CurveKind::TypeII)
                EXPECT_GE(all.front().boundary_circles, 2);
            // exhaustive check that nothing valid was missed
            std::size_t count = 0;
            for (int h = 0; h <= g; ++h)
                for (int n = 1; n <= g + 1; ++n)
                    count += is_valid_decomposition(c, {h, n, c.fixed_circles});
            EXPECT_EQ(count, all.size());
        }
}

TEST(Topology, GaugeCaseExamples) {
    EXPECT_EQ(classify_gauge_case({2, CurveKind::TypeI, 1}, {2, 1, w1_from_string("1")}), GaugeCase::AllMoebius);
    EXPECT_EQ(classify_gauge_case({2, CurveKind::TypeII, 1}, {2, 1, w1_from_string("1")}), GaugeCase::Generic);
    EXPECT_EQ(classify_gauge_case({2, CurveKind::TypeI, 3}, {2, 0, w1_from_string("000")}),
              GaugeCase::AllOrientable);
    EXPECT_EQ(classify_gauge_case({2, CurveKind::TypeII, 2}, {2, 0, w1_from_string("00")}),
              GaugeCase::AllOrientable);
    EXPECT_THROW(classify_gauge_case({2, CurveKind::Type0, 0}, {2, 0, {}}), ValidationError);
}

TEST(Topology, OddDegreeParityChain) {
    for (int g = 0; g <= 8; ++g)
        for (const auto& c : enumerate_curves(g)) {
            if (c.fixed_circles == 0)
                continue;
            for (long d : {-3L, -1L, 1L, 3L, 5L})
                for (const auto& b : enumerate_real_bundles(c, 2, d)) {
                    EXPECT_EQ(b.moebius_count() % 2, 1);
                    auto label = classify_gauge_case(c, b);
                    EXPECT_NE(label, GaugeCase::AllOrientable);
                    if (label == GaugeCase::AllMoebius)
                        EXPECT_EQ(g % 2, 0);
                }
        }
}

TEST(Topology, CircleTypes) {
    auto dec = decompose_surface({2, CurveKind::TypeII, 1});
    auto kinds = circle_types(dec, {2, 1, w1_from_string("1")});
    EXPECT_EQ(kinds, (std::vector<CircleType>{CircleType::IdentityMoebius, CircleType::Antipodal,
                                              CircleType::Antipodal}));
    auto kinds2 = circle_types({0, 3, 3}, {2, 1, w1_from_string("010")});
    EXPECT_EQ(kinds2, (std::vector<CircleType>{CircleType::IdentityOrientable, CircleType::IdentityMoebius,
                                               CircleType::IdentityOrientable}));
}

TEST(Topology, StringRoundTrips) {
    for (auto k : {CurveKind::Type0, CurveKind::TypeI, CurveKind::TypeII})
        EXPECT_EQ(curve_kind_from_string(to_string(k)), k);
    EXPECT_EQ(curve_kind_from_string("TypeII"), CurveKind::TypeII);
    for (auto k : {GaugeCase::Generic, GaugeCase::AllMoebius, GaugeCase::AllOrientable})
        EXPECT_EQ(gauge_case_from_string(to_string(k)), k);
    EXPECT_EQ(w1_to_string(w1_from_string("0110")), "0110");
    EXPECT_THROW(curve_kind_from_string("III"), ValidationError);
}
