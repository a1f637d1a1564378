#include <gtest/gtest.h>

#include "reptheory_fixtures.hpp"
#include "z4cent/character_table.hpp"

using namespace z4cent;

namespace {

const ProjGroup& pgroup() {
    static const ProjGroup pg = project(type_ii_group());
    return pg;
}

const std::vector<Representation>& irreps() {
    static const std::vector<Representation> r = build_irreps();
    return r;
}

const CharacterTable& table() {
    static const CharacterTable t = build_character_table(pgroup());
    return t;
}

CycMatrix half(const CycMatrix& m) { return Cyc8(Rational(1, 2)) * m; }

std::vector<BigInt> unit(std::size_t i) {
    std::vector<BigInt> e(10, 0);
    e[i] = 1;
    return e;
}

}  // namespace

TEST(Irreps, DegreesAndRelations) {
    const std::vector<std::size_t> degrees{1, 1, 2, 3, 3, 3, 3, 3, 3, 6};
    ASSERT_EQ(irreps().size(), 10u);
    std::size_t squares = 0;
    for (std::size_t k = 0; k < 10; ++k) {
        const auto& r = irreps()[k];
        EXPECT_EQ(r.index, static_cast<int>(k + 1));
        EXPECT_EQ(r.degree, degrees[k]);
        EXPECT_EQ(r.image_d.rows(), r.degree);
        EXPECT_TRUE(satisfies_projective_relations(r.image_d, r.image_t)) << r.index;
        squares += r.degree * r.degree;
    }
    EXPECT_EQ(squares, 96u);
}

TEST(Irreps, Rho7) {
    EXPECT_EQ(irreps()[6].image_d, CycMatrix::diagonal({Cyc8::eta(), Cyc8::i(), -Cyc8::eta()}));
    // rho7 is the natural representation rescaled by central scalars
    EXPECT_EQ(irreps()[6].image_d, Cyc8::eta() * generator_d());
    EXPECT_EQ(irreps()[6].image_t, Cyc8::eta_pow(3) * generator_t());
}

TEST(Irreps, Rho4MatchesDisplayedMatrices) {
    const auto& r = irreps()[3];
    EXPECT_EQ(r.image_d, CycMatrix::diagonal({Cyc8::i(), -Cyc8::i(), Cyc8(-1)}));
    EXPECT_EQ(r.image_t, half(CycMatrix{{1, 1, 2}, {1, 1, -2}, {1, -1, 0}}));
}

TEST(Irreps, Rho3MatchesDisplayedMatrices) {
    const auto& r = irreps()[2];
    EXPECT_EQ(r.image_d, (CycMatrix{{-1, 1}, {0, 1}}));
    EXPECT_EQ(r.image_t, (CycMatrix{{1, 0}, {1, -1}}));
}

TEST(Irreps, Rho10MatchesDisplayedMatrices) {
    const auto& r = irreps()[9];
    EXPECT_EQ(r.image_d, CycMatrix::diagonal({Cyc8(1), Cyc8(-1), Cyc8::eta_pow(7), Cyc8::eta(), Cyc8::eta_pow(5),
                                              Cyc8::eta_pow(3)}));
    EXPECT_EQ(r.image_t, half(CycMatrix{{0, 0, 1, 1, 1, 1},
                                        {0, 0, -1, 1, 1, -1},
                                        {1, -1, 0, 1, -1, 0},
                                        {1, 1, 1, 0, 0, -1},
                                        {1, 1, -1, 0, 0, 1},
                                        {1, -1, 0, -1, 1, 0}}));
}

TEST(Irreps, RestrictionsAreAuditable) {
    for (const auto& r : irrep_restrictions()) {
        EXPECT_EQ(r.ambient_d * r.basis, r.basis * r.restricted_d) << r.index;
        EXPECT_EQ(r.ambient_t * r.basis, r.basis * r.restricted_t) << r.index;
        EXPECT_EQ(r.basis.rank(), r.basis.cols());
    }
}

TEST(Irreps, RestrictionRejectsNonInvariantSpan) {
    CycMatrix basis(9, 1);
    basis(0, 0) = Cyc8(1);
    EXPECT_THROW(restrict_to_subspace(rho7_t().kron(rho7_t()), basis), VerificationFailure);
}

TEST(Irreps, RelationCheckRejectsWrongImages) {
    EXPECT_FALSE(satisfies_projective_relations(rho7_d(), Cyc8(2) * rho7_t()));
    EXPECT_FALSE(satisfies_projective_relations(rho7_d().pow(2), rho7_t()));
}

TEST(Character, Examples) {
    const auto& cls = pgroup().classes();
    EXPECT_EQ(character(irreps()[0], cls), std::vector<Cyc8>(10, Cyc8(1)));
    const auto expected = fixtures::printed_character_table();
    EXPECT_EQ(character(irreps()[6], cls), expected[6]);
    EXPECT_EQ(character(irreps()[9], cls), expected[9]);
}

TEST(CharacterTable, EqualsPrintedTable) {
    const auto expected = fixtures::printed_character_table();
    for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 10; ++c)
            EXPECT_EQ(table().matrix()(r, c), expected[r][c]) << "chi" << r + 1 << " at class " << c + 1;
}

TEST(CharacterTable, Orthogonality) {
    const auto rep = verify_character_table(table());
    EXPECT_TRUE(rep.rows_orthonormal);
    EXPECT_TRUE(rep.columns_orthogonal);
    EXPECT_TRUE(rep.first_row_trivial);
    EXPECT_TRUE(rep.first_column_degrees);
    EXPECT_TRUE(rep.degree_square_sum);
    EXPECT_EQ(table().group_order(), 96u);

    EXPECT_EQ(table().inner_product(table().row(6), table().row(6)), Cyc8(1));
    EXPECT_EQ(table().inner_product(table().row(5), table().row(6)), Cyc8());
    Cyc8 column;
    for (std::size_t r = 0; r < 10; ++r) column += table().matrix()(r, 0) * table().matrix()(r, 0).conj();
    EXPECT_EQ(column, Cyc8(96));
}

TEST(CharacterTable, ConjugateAndSignTwist) {
    const auto chi2 = table().row(1), chi6 = table().row(5), chi7 = table().row(6), chi8 = table().row(7);
    for (std::size_t c = 0; c < 10; ++c) EXPECT_EQ(chi6[c], chi7[c].conj());
    EXPECT_EQ(chi8, pointwise_product(chi2, chi7));
}

TEST(Decompose, IrreduciblesGiveUnitVectors) {
    for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(decompose_character(table(), table().row(i)), unit(i));
}

TEST(Decompose, ProductsWithChi7) {
    const auto products = fixtures::printed_products();
    for (std::size_t i = 0; i < 10; ++i) {
        std::vector<BigInt> expected(10, 0);
        for (int k : products[i]) expected[static_cast<std::size_t>(k - 1)] += 1;
        EXPECT_EQ(decompose_character(table(), pointwise_product(table().row(6), table().row(i))), expected)
            << "chi7 * chi" << i + 1;
    }
}

TEST(Decompose, Chi7TimesChi10Values) {
    const auto values = pointwise_product(table().row(6), table().row(9));
    const std::vector<Cyc8> expected{Cyc8(18), Cyc8(0), Cyc8::gaussian(-2, 4), Cyc8(0), Cyc8(2),
                                     Cyc8::gaussian(-2, -4), Cyc8(0), Cyc8(0), Cyc8(0), Cyc8(-2)};
    EXPECT_EQ(values, expected);
    const std::vector<BigInt> m{0, 0, 0, 1, 1, 0, 1, 1, 0, 1};
    EXPECT_EQ(decompose_character(table(), values), m);
}

TEST(Decompose, RejectsNonCharacters) {
    std::vector<Cyc8> half_trivial(10, Cyc8(Rational(1, 2)));
    EXPECT_THROW(decompose_character(table(), half_trivial), VerificationFailure);
    // chi1 - chi2 is a virtual character
    std::vector<Cyc8> diff;
    for (std::size_t c = 0; c < 10; ++c) diff.push_back(table().matrix()(0, c) - table().matrix()(1, c));
    EXPECT_THROW(decompose_character(table(), diff), VerificationFailure);
    EXPECT_THROW(decompose_character(table(), std::vector<Cyc8>(3)), DimensionMismatch);
}
