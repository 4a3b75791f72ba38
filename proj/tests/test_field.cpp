#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qexch/exact_scalar.hpp"
#include "qexch/rational.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>

using namespace qexch;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2) + Rational(5, 2) == Rational(4));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(3).reciprocal() / Rational(0), std::domain_error);
}

TEST_CASE("rational text round-trip") {
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-5).to_string() == "-5");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    auto rng = seeded_rng(11, 0);
    for (int t = 0; t < 200; ++t) {
        Rational r = testing::random_rational(rng);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("scalar addition") {
    // additive identity
    ExactScalar one = ExactScalar::one(28);
    CHECK(one + ExactScalar::zero(28) == one);
    // like radical terms: (1/28)sqrt(28) + (1/28)sqrt(28) = (1/14)sqrt(28)
    ExactScalar c = ExactScalar::inv_radical(28);
    ExactScalar sum = c + c;
    CHECK(sum == ExactScalar(Rational(0), Rational(0), Rational(1, 14), Rational(0), 28));
    // rational addition
    ExactScalar x(Rational(3, 2), 1), y(Rational(5, 2), 1);
    CHECK(x + y == ExactScalar(Rational(4), 1));
}

TEST_CASE("scalar multiplication") {
    // (1/28)sqrt(28) * (1/28)sqrt(28) = 1/28
    ExactScalar c = ExactScalar::inv_radical(28);
    CHECK(c * c == ExactScalar(Rational(1, 28), 28));
    // i * i = -1
    ExactScalar i = ExactScalar::i(28);
    CHECK(i * i == ExactScalar(Rational(-1), 28));
    // (1 + sqrt(28))(1 - sqrt(28)) = -27
    ExactScalar plus(Rational(1), Rational(0), Rational(1), Rational(0), 28);
    ExactScalar minus(Rational(1), Rational(0), Rational(-1), Rational(0), 28);
    CHECK(plus * minus == ExactScalar(Rational(-27), 28));
}

TEST_CASE("radicand discipline") {
    ExactScalar a = ExactScalar::one(28);
    ExactScalar b = ExactScalar::one(5);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(a * b, std::domain_error);
    // rational-valued scalars still compare equal across radicands
    CHECK(a == b);
    // m = 1 folds the radical into the rational part
    ExactScalar folded(Rational(1), Rational(0), Rational(2), Rational(0), 1);
    CHECK(folded == ExactScalar(Rational(3), 1));
    // perfect-square radicands fold too
    ExactScalar nine(Rational(0), Rational(0), Rational(1), Rational(0), 9);
    CHECK(nine == ExactScalar(Rational(3), 9));
    CHECK_THROWS_AS(ExactScalar(Rational(1), 0), std::domain_error);
}

TEST_CASE("conjugation") {
    CHECK(ExactScalar::i(1).conj() == -ExactScalar::i(1));
    ExactScalar real(Rational(3, 2), 28);
    CHECK(real.conj() == real);
    ExactScalar mixed(Rational(1), Rational(0), Rational(0), Rational(1), 28);
    CHECK(mixed.conj() == ExactScalar(Rational(1), Rational(0), Rational(0), Rational(-1), 28));
}

TEST_CASE("inverse") {
    CHECK(ExactScalar(Rational(2), 1).inv() == ExactScalar(Rational(1, 2), 1));
    CHECK(ExactScalar::i(28).inv() == -ExactScalar::i(28));
    CHECK(ExactScalar::radical(28).inv() == ExactScalar::inv_radical(28));
    CHECK_THROWS_AS(ExactScalar::zero(28).inv(), std::domain_error);
}

TEST_CASE("float bridge") {
    // 1/sqrt(28) as (0,0,1/28,0; m=28); oracle: direct evaluation of 28^(-1/2)
    double expected = std::pow(28.0, -0.5);
    auto z = ExactScalar::inv_radical(28).to_complex();
    CHECK(z.real() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(z.imag() == 0.0);
    CHECK(ExactScalar::zero(5).to_complex() == std::complex<double>{0.0, 0.0});
    ExactScalar one_plus_i(Rational(1), Rational(1), Rational(0), Rational(0), 1);
    CHECK(one_plus_i.to_complex() == std::complex<double>{1.0, 1.0});
}

TEST_CASE("ring axioms on random triples") {
    for (int radicand : {1, 2, 5, 28}) {
        auto rng = seeded_rng(7, static_cast<std::uint64_t>(radicand));
        for (int t = 0; t < 60; ++t) {
            ExactScalar x = testing::random_scalar(rng, radicand);
            ExactScalar y = testing::random_scalar(rng, radicand);
            ExactScalar z = testing::random_scalar(rng, radicand);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK(x.conj().conj() == x);
        }
    }
}

TEST_CASE("inverse is exact on random nonzero values") {
    for (int radicand : {2, 5, 28}) {
        auto rng = seeded_rng(13, static_cast<std::uint64_t>(radicand));
        for (int t = 0; t < 40; ++t) {
            ExactScalar x = testing::random_nonzero_scalar(rng, radicand);
            CHECK(x * x.inv() == ExactScalar::one(radicand));
        }
    }
}

TEST_CASE("float bridge respects products") {
    auto rng = seeded_rng(17, 0);
    for (int t = 0; t < 60; ++t) {
        ExactScalar x = testing::random_scalar(rng, 28);
        ExactScalar y = testing::random_scalar(rng, 28);
        std::complex<double> exact = (x * y).to_complex();
        std::complex<double> floated = x.to_complex() * y.to_complex();
        CHECK(std::abs(exact - floated) <= 1e-12 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("scalar text round-trip") {
    ExactScalar coeff = ExactScalar::inv_radical(28);
    CHECK(coeff.to_text() == "a=0;b=0;c=1/28;d=0;radicand=28");
    CHECK(ExactScalar::parse_text(coeff.to_text()) == coeff);
    auto rng = seeded_rng(19, 0);
    for (int radicand : {1, 7, 28}) {
        for (int t = 0; t < 50; ++t) {
            ExactScalar s = testing::random_scalar(rng, radicand);
            CHECK(ExactScalar::parse_text(s.to_text()) == s);
        }
    }
    CHECK_THROWS_AS(ExactScalar::parse_text("nonsense"), std::invalid_argument);
}

TEST_CASE("pretty rendering") {
    CHECK(ExactScalar::zero(28).pretty() == "0");
    CHECK(ExactScalar(Rational(3, 2), 1).pretty() == "3/2");
    CHECK((-ExactScalar::i(1)).pretty() == "-i");
    ExactScalar mix(Rational(1), Rational(0), Rational(1, 28), Rational(0), 28);
    CHECK(mix.pretty() == "1 + 1/28*sqrt(28)");
}
