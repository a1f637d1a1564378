#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "z4cent/cyc8.hpp"
#include "z4cent/cyc_matrix.hpp"
#include "z4cent/generators.hpp"

using namespace z4cent;

namespace {

const Cyc8 eta = Cyc8::eta();

Cyc8 random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
            Rational(num(rng), den(rng))};
}

double dist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0/1");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
    EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Cyc8, AddExamples) {
    EXPECT_EQ(eta + eta.pow(3), Cyc8(0, 1, 0, 1));
    EXPECT_EQ(Cyc8::i() + Cyc8::i(), Cyc8(0, 0, 2, 0));
    EXPECT_EQ((1 + eta) + (1 - eta), Cyc8(2));
}

TEST(Cyc8, MulExamples) {
    EXPECT_EQ(eta * eta.pow(3), Cyc8(-1));
    EXPECT_EQ(Cyc8::i() * Cyc8::i(), Cyc8(-1));

    const Cyc8 s = eta + eta.pow(3);  // sqrt(2) * i
    const Cyc8 sq = s * s;
    EXPECT_EQ(sq, Cyc8(-2));
    EXPECT_LT(dist(sq.to_complex(), s.to_complex() * s.to_complex()), 1e-12);
}

TEST(Cyc8, RootOfUnityPowers) {
    EXPECT_EQ(eta.pow(4), Cyc8(-1));
    EXPECT_EQ(eta.pow(8), Cyc8(1));
    EXPECT_EQ(eta.pow(-1), eta.pow(7));
    for (long k = -16; k <= 16; ++k) EXPECT_EQ(Cyc8::eta_pow(k), eta.pow(k)) << k;
}

TEST(Cyc8, EmbeddingIdentities) {
    EXPECT_EQ(eta * eta, Cyc8::i());
    const Cyc8 sqrt2 = eta - eta.pow(3);
    EXPECT_EQ(sqrt2 * sqrt2, Cyc8(2));
    EXPECT_EQ(eta + eta.pow(7), sqrt2);
    EXPECT_LT(std::abs(sqrt2.to_complex() - std::sqrt(2.0)), 1e-12);
}

TEST(Cyc8, ConjExamples) {
    EXPECT_EQ(eta.conj(), -eta.pow(3));
    EXPECT_EQ(Cyc8::i().conj(), -Cyc8::i());
    EXPECT_EQ(Cyc8::gaussian(1, 2).conj(), Cyc8::gaussian(1, -2));
    // b = conj(a) with a = -1-2i
    EXPECT_EQ(Cyc8::gaussian(-1, -2).conj(), Cyc8::gaussian(-1, 2));
}

TEST(Cyc8, InverseExamples) {
    EXPECT_EQ(eta.inverse(), -eta.pow(3));
    EXPECT_EQ(Cyc8(2).inverse(), Cyc8(Rational(1, 2)));
    const Cyc8 v = (1 + eta).inverse();
    EXPECT_EQ((1 + eta) * v, Cyc8(1));
    EXPECT_THROW(Cyc8().inverse(), DivisionByZero);
}

TEST(Cyc8, ToComplexExamples) {
    const double h = std::sqrt(2.0) / 2;
    EXPECT_LT(dist(Cyc8::i().to_complex(), {0, 1}), 1e-15);
    EXPECT_LT(dist(eta.to_complex(), {h, h}), 1e-15);
    EXPECT_LT(dist(Cyc8::gaussian(-1, -2).to_complex(), {-1, -2}), 1e-15);
}

TEST(Cyc8, CanonicalStringRoundTrip) {
    const Cyc8 v(Rational(1, 2), -3, 0, Rational(-7, 9));
    EXPECT_EQ(v.to_string(), "1/2,-3/1,0/1,-7/9");
    EXPECT_EQ(Cyc8::parse(v.to_string()), v);
    EXPECT_THROW(Cyc8::parse("1,2,3"), Error);
}

TEST(Cyc8, PrettyPrint) {
    EXPECT_EQ(Cyc8::gaussian(-1, -2).to_pretty(), "-1-2i");
    EXPECT_EQ(Cyc8::i().to_pretty(), "i");
    EXPECT_EQ(Cyc8(3).to_pretty(), "3");
    EXPECT_EQ((-eta.pow(3)).to_pretty(), "-eta^3");
}

// Property checks over random samples.
TEST(Cyc8Property, RingAxioms) {
    std::mt19937 rng(20240101);
    for (int trial = 0; trial < 200; ++trial) {
        const Cyc8 a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(Cyc8Property, ConjIsInvolutiveHomomorphism) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Cyc8 a = random_cyc(rng), b = random_cyc(rng);
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    }
}

TEST(Cyc8Property, InverseIdentity) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Cyc8 a = random_cyc(rng);
        if (a.is_zero()) continue;
        EXPECT_EQ(a * a.inverse(), Cyc8(1));
        EXPECT_TRUE(Cyc8(a.norm()).is_rational());
    }
}

TEST(Cyc8Property, ToComplexIsHomomorphism) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Cyc8 a = random_cyc(rng), b = random_cyc(rng);
        EXPECT_LT(dist((a * b).to_complex(), a.to_complex() * b.to_complex()), 1e-12);
        EXPECT_LT(dist((a + b).to_complex(), a.to_complex() + b.to_complex()), 1e-12);
        EXPECT_LT(dist(a.conj().to_complex(), std::conj(a.to_complex())), 1e-12);
    }
}

TEST(CycMatrix, MulExamples) {
    const CycMatrix d = generator_d();
    const CycMatrix t = generator_t();
    EXPECT_EQ(t * t, CycMatrix::diagonal({Cyc8::i(), Cyc8::i(), Cyc8::i()}));
    EXPECT_EQ(CycMatrix::identity(3) * d, d);
    EXPECT_EQ(d.pow(8), CycMatrix::identity(3));
    EXPECT_THROW(CycMatrix(2, 3) * CycMatrix(2, 3), DimensionMismatch);
}

TEST(CycMatrix, KronExamples) {
    const CycMatrix rho7_d = CycMatrix::diagonal({eta, Cyc8::i(), -eta});
    const Cyc8 i = Cyc8::i();
    EXPECT_EQ(rho7_d.kron(rho7_d), CycMatrix::diagonal({i, eta.pow(3), -i, eta.pow(3), -1, eta.pow(7), -i,
                                                         eta.pow(7), i}));
    EXPECT_EQ(CycMatrix::identity(3).kron(CycMatrix::identity(3)), CycMatrix::identity(9));

    const CycMatrix m{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}};
    const CycMatrix rho7_t = Cyc8(Rational(-1, 2)) * m;
    const CycMatrix expected = Cyc8(Rational(1, 4)) * CycMatrix{
        {1, 2, 1, 2, 4, 2, 1, 2, 1},     {1, 0, -1, 2, 0, -2, 1, 0, -1}, {1, -2, 1, 2, -4, 2, 1, -2, 1},
        {1, 2, 1, 0, 0, 0, -1, -2, -1},  {1, 0, -1, 0, 0, 0, -1, 0, 1},  {1, -2, 1, 0, 0, 0, -1, 2, -1},
        {1, 2, 1, -2, -4, -2, 1, 2, 1},  {1, 0, -1, -2, 0, 2, 1, 0, -1}, {1, -2, 1, -2, 4, -2, 1, -2, 1}};
    EXPECT_EQ(rho7_t.kron(rho7_t), expected);
}

TEST(CycMatrix, InverseExamples) {
    EXPECT_EQ(CycMatrix::identity(10).inverse(), CycMatrix::identity(10));
    const CycMatrix m = CycMatrix::diagonal({2, eta});
    EXPECT_EQ(m.inverse(), CycMatrix::diagonal({Rational(1, 2), -eta.pow(3)}));
    const CycMatrix t = generator_t();
    EXPECT_EQ(t * t.inverse(), CycMatrix::identity(3));
    EXPECT_THROW((CycMatrix{{1, 2}, {2, 4}}).inverse(), SingularMatrix);
}

TEST(CycMatrix, DetExamples) {
    EXPECT_EQ(CycMatrix::identity(3).det(), Cyc8(1));
    EXPECT_EQ(generator_d().det(), -eta);
    const Cyc8 dt = generator_t().det();
    EXPECT_NEAR(std::abs(dt.to_complex()), 1.0, 1e-12);
    EXPECT_EQ(dt * dt.conj(), Cyc8(1));
    EXPECT_EQ((CycMatrix{{1, 2}, {2, 4}}).det(), Cyc8(0));
}

TEST(CycMatrix, RankAndScalar) {
    EXPECT_EQ((CycMatrix{{1, 2}, {2, 4}}).rank(), 1u);
    EXPECT_EQ(CycMatrix::identity(4).rank(), 4u);
    EXPECT_TRUE((Cyc8::i() * CycMatrix::identity(3)).is_scalar());
    EXPECT_FALSE(generator_d().is_scalar());
}

TEST(CycMatrix, SerializationIsCanonical) {
    const CycMatrix a = generator_t() * generator_t();
    const CycMatrix b = CycMatrix::diagonal({Cyc8::i(), Cyc8::i(), Cyc8::i()});
    EXPECT_EQ(a.serialize(), b.serialize());
    EXPECT_EQ((CycMatrix{{1, 0}, {0, Rational(1, 2)}}).serialize(),
              "1/1,0/1,0/1,0/1 0/1,0/1,0/1,0/1;0/1,0/1,0/1,0/1 1/2,0/1,0/1,0/1");
}
