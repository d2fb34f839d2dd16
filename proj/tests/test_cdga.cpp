#include <gtest/gtest.h>

#include "oracles.hpp"
#include "realbundles/cdga.hpp"
#include "realbundles/dga_oracle.hpp"
#include "realbundles/error.hpp"

using namespace rb;

namespace {

CDGA koszul_pair(unsigned p = 0, GeneratorKind z_kind = GeneratorKind::Polynomial) {
    auto c = make_cdga({{"z", 2, z_kind}, {"q", 3, GeneratorKind::Exterior}}, FieldSpec{p});
    set_differential(c, "z", {{Rational(1), {{"q", 1}}}});
    return c;
}

std::vector<std::string> basis_strings(const CDGA& c, int m) {
    std::vector<std::string> out;
    for (const auto& mono : monomial_basis(c, m))
        out.push_back(monomial_to_string(c, mono));
    return out;
}

} // namespace

TEST(Cdga, MonomialBasisExamples) {
    auto x = make_cdga({{"x", 1, GeneratorKind::Exterior}}, {});
    EXPECT_EQ(basis_strings(x, 1), (std::vector<std::string>{"x"}));
    EXPECT_TRUE(monomial_basis(x, 2).empty());

    auto xz = make_cdga({{"x1", 1, GeneratorKind::Exterior}, {"z", 2, GeneratorKind::Polynomial}}, {});
    EXPECT_EQ(basis_strings(xz, 3), (std::vector<std::string>{"x1*z"}));
    EXPECT_EQ(monomial_basis(xz, 0), (std::vector<Monomial>{xz.unit()}));
}

TEST(Cdga, MultiplicationSigns) {
    auto c = make_cdga({{"a", 1, GeneratorKind::Exterior}, {"b", 1, GeneratorKind::Exterior},
                        {"z", 2, GeneratorKind::Polynomial}},
                       {});
    auto a = c.generator_monomial(0), b = c.generator_monomial(1), z = c.generator_monomial(2);
    auto [ab_coef, ab] = multiply(c, a, b);
    auto [ba_coef, ba] = multiply(c, b, a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab_coef, 1);
    EXPECT_EQ(ba_coef, -1);
    EXPECT_EQ(multiply(c, a, a).first, 0);
    EXPECT_EQ(multiply(c, z, a).first, 1);
    auto [zz_coef, zz] = multiply(c, z, z);
    EXPECT_EQ(zz_coef, 1);
    EXPECT_EQ(zz[2], 2U);
}

TEST(Cdga, DividedPowerProducts) {
    auto c = make_cdga({{"z", 2, GeneratorKind::DividedPower}}, FieldSpec{5});
    Monomial g2{2}, g3{3};
    auto [coef, m] = multiply(c, g2, g3);
    EXPECT_EQ(m, Monomial{5});
    EXPECT_EQ(coef, 10); // binom(5,2), zero mod 5
    auto dm = differential_matrix(c, 9);
    EXPECT_TRUE(dm.is_zero());
}

TEST(Cdga, DifferentialMatrixExamples) {
    auto c = koszul_pair();
    auto d2 = differential_matrix(c, 2);
    ASSERT_EQ(d2.rows, 1U);
    ASSERT_EQ(d2.cols, 1U);
    EXPECT_EQ(d2.at(0, 0), 1);
    auto d4 = differential_matrix(c, 4);
    ASSERT_EQ(d4.rows, 1U);
    ASSERT_EQ(d4.cols, 1U);
    EXPECT_EQ(d4.at(0, 0), 2);

    auto zero = make_cdga({{"x", 1, GeneratorKind::Exterior}, {"z", 2, GeneratorKind::Polynomial},
                           {"y", 3, GeneratorKind::Exterior}},
                          {});
    for (int m = 0; m <= 10; ++m)
        EXPECT_TRUE(differential_matrix(zero, m).is_zero()) << m;
}

TEST(Cdga, LeibnizRuleOnProducts) {
    auto c = make_cdga({{"x", 1, GeneratorKind::Exterior}, {"z", 2, GeneratorKind::Polynomial},
                        {"q", 3, GeneratorKind::Exterior}, {"p", 4, GeneratorKind::Polynomial},
                        {"y", 3, GeneratorKind::Exterior}},
                       {});
    set_differential(c, "z", {{Rational(1), {{"q", 1}}}});
    set_differential(c, "y", {{Rational(1), {{"p", 1}}}, {Rational(-1), {{"z", 2}}}});
    validate_cdga(c);
    for (int m = 0; m <= 9; ++m)
        for (const auto& a : monomial_basis(c, m))
            for (int k = 0; k + m <= 9; ++k)
                for (const auto& b : monomial_basis(c, k)) {
                    Element ea{{a, Rational(1)}}, eb{{b, Rational(1)}};
                    auto lhs = apply_differential(c, multiply(c, ea, eb));
                    auto rhs = multiply(c, apply_differential(c, ea), eb);
                    auto sign = Rational(m % 2 ? -1 : 1);
                    for (const auto& [mono, coef] : multiply(c, ea, apply_differential(c, eb))) {
                        rhs[mono] += sign * coef;
                        if (rhs[mono] == 0)
                            rhs.erase(mono);
                    }
                    EXPECT_EQ(lhs, rhs) << monomial_to_string(c, a) << " * " << monomial_to_string(c, b);
                }
}

TEST(Cdga, Validation) {
    auto c = koszul_pair();
    EXPECT_NO_THROW(validate_cdga(c));
    auto bad = make_cdga({{"z", 2, GeneratorKind::Polynomial}, {"x", 1, GeneratorKind::Exterior}}, {});
    set_differential(bad, "z", {{Rational(1), {{"x", 1}}}});
    try {
        validate_cdga(bad);
        FAIL() << "expected homogeneity error";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.code(), "homogeneity");
    }
    auto denom = make_cdga({{"z", 2, GeneratorKind::Polynomial}, {"q", 3, GeneratorKind::Exterior}}, FieldSpec{3});
    set_differential(denom, "z", {{Rational(1, 3), {{"q", 1}}}});
    EXPECT_THROW(validate_cdga(denom), ValidationError);
    EXPECT_THROW(make_cdga({{"z", 2, GeneratorKind::Polynomial}}, FieldSpec{2}), ValidationError);
    EXPECT_THROW(set_differential(c, "nope", {}), ValidationError);
}

TEST(Cdga, CohomologyExamples) {
    const std::vector<std::size_t> acyclic{1, 0, 0, 0, 0, 0, 0, 0, 0};
    EXPECT_EQ(cohomology_dimensions(koszul_pair(0), 8).dims, acyclic);
    // δ(z^p) = p z^(p-1) q vanishes mod p, so z^p and z^(p-1) q survive ...
    EXPECT_EQ(cohomology_dimensions(koszul_pair(3), 8).dims, (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 1, 1, 0}));
    // ... while divided powers keep the pair acyclic in every characteristic.
    std::vector<std::size_t> unit_only(13, 0);
    unit_only[0] = 1;
    for (unsigned p : {0U, 3U, 5U})
        EXPECT_EQ(cohomology_dimensions(koszul_pair(p, GeneratorKind::DividedPower), 12).dims, unit_only) << p;
    auto x = make_cdga({{"x", 1, GeneratorKind::Exterior}}, {});
    EXPECT_EQ(cohomology_dimensions(x, 3).dims, (std::vector<std::size_t>{1, 1, 0, 0}));
}

TEST(Cdga, CharacteristicMattersWhenItShould) {
    // δz = 3q: over Q the pair is acyclic; over F_3 it has zero differential.
    auto c = make_cdga({{"z", 2, GeneratorKind::Polynomial}, {"q", 3, GeneratorKind::Exterior}}, FieldSpec{3});
    set_differential(c, "z", {{Rational(3), {{"q", 1}}}});
    std::vector<std::size_t> free_dims;
    for (auto v : oracle::count_monomials({{2, false}, {3, true}}, 8))
        free_dims.push_back(static_cast<std::size_t>(v));
    EXPECT_EQ(cohomology_dimensions(c, 8).dims, free_dims);
    c.field = FieldSpec{0};
    EXPECT_EQ(cohomology_dimensions(c, 8).dims, (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Cdga, RankOfKnownMatrices) {
    ExactMatrix m{3, 3, 0, {}};
    m.columns = {{{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}},
                 {{0, Rational(4)}, {1, Rational(5)}, {2, Rational(6)}},
                 {{0, Rational(7)}, {1, Rational(8)}, {2, Rational(9)}}};
    EXPECT_EQ(matrix_rank(m), 2U);
    m.columns[2] = {{0, Rational(7)}, {1, Rational(8)}, {2, Rational(10)}};
    EXPECT_EQ(matrix_rank(m), 3U);
    // determinant is 3, so the matrix is singular over F_3
    m.characteristic = 3;
    m.columns = {{{0, Rational(1)}, {1, Rational(2)}, {2, Rational(0)}},
                 {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}},
                 {{0, Rational(2)}, {1, Rational(1)}, {2, Rational(1)}}};
    for (auto& col : m.columns)
        std::erase_if(col, [](const auto& e) { return e.second == 0; });
    EXPECT_EQ(matrix_rank(m), 2U);
    m.characteristic = 0;
    EXPECT_EQ(matrix_rank(m), 3U);
}
