#include <cmath>

#include "doctest.h"
#include "rscwe/cyclo.hpp"
#include "rscwe/error.hpp"
#include "test_support.hpp"

using namespace rscwe;

namespace {

CyclotomicInt from(std::uint32_t p, std::vector<long> c) {
    std::vector<BigInt> big(c.begin(), c.end());
    return CyclotomicInt(p, big);
}

}  // namespace

TEST_CASE("cyclotomic ring operations") {
    const auto zeta = CyclotomicInt::root_power(3, 1);
    const auto zeta2 = CyclotomicInt::root_power(3, 2);
    CHECK(zeta + CyclotomicInt(3) == zeta);
    CHECK(zeta * zeta2 == CyclotomicInt::constant(3, 1));
    const auto d = zeta - zeta2;
    CHECK(d * d == CyclotomicInt::constant(3, -3));
    CHECK(zeta.conj() == zeta2);
    CHECK(-(-d) == d);
    CHECK_THROWS_AS(zeta + CyclotomicInt::root_power(5, 1), Error);
    try {
        (void)(zeta * CyclotomicInt::root_power(5, 1));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MixedCyclotomicOrder);
    }
}

TEST_CASE("power basis is a normal form") {
    // 1 + zeta + ... + zeta^{p-1} = 0 for every p.
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        std::vector<BigInt> ones(p, BigInt(1));
        CHECK(CyclotomicInt(p, ones).is_zero());
    }
    CHECK(from(5, {0, 0, 0, 0, 1}) == from(5, {-1, -1, -1, -1}));
}

TEST_CASE("root_power") {
    CHECK(CyclotomicInt::root_power(7, 0) == CyclotomicInt::constant(7, 1));
    CHECK(CyclotomicInt::root_power(5, 7) == from(5, {0, 0, 1, 0}));
    CHECK(CyclotomicInt::root_power(3, 2) == from(3, {-1, -1}));
    CHECK(CyclotomicInt::root_power(3, -1) == CyclotomicInt::root_power(3, 2));
}

TEST_CASE("additive character sums") {
    const Field f = Field::build(3, 2);
    CHECK(additive_char_sum(f, FieldElement{0}) == CyclotomicInt::constant(3, 9));
    CHECK(additive_char_sum(f, FieldElement{5}).is_zero());
    const std::vector<FieldElement> just_zero{FieldElement{0}};
    for (auto b : f.elements()) CHECK(additive_char_sum(f, b, just_zero) == CyclotomicInt::constant(3, 1));
}

TEST_CASE("gauss sum small cases") {
    const Field gf3 = Field::build(3, 1);
    const auto g3 = gauss_sum(gf3);
    CHECK(g3 == CyclotomicInt::root_power(3, 1) - CyclotomicInt::root_power(3, 2));
    CHECK(g3 * g3 == CyclotomicInt::constant(3, -3));
    const auto z = g3.embed();
    CHECK(std::abs(z.real()) < 1e-9);
    CHECK(std::abs(z.imag() - std::sqrt(3.0)) < 1e-9);

    const auto g5 = gauss_sum(Field::build(5, 1));
    CHECK(g5 * g5 == CyclotomicInt::constant(5, 5));

    CHECK_THROWS_AS(gauss_sum(Field::build(2, 3)), Error);
}

TEST_CASE("gauss sum identities") {
    for (auto [p, m] : rscwe::testing::prime_powers(343, true)) {
        const Field f = Field::build(p, m);
        const auto g = gauss_sum(f);
        const long eta_minus_one = f.quadratic_character(f.neg(f.one()));
        CHECK(g * g == CyclotomicInt::constant(p, eta_minus_one * static_cast<long>(f.q())));
        CHECK(g * g.conj() == CyclotomicInt::constant(p, f.q()));
        const auto z = g.embed();
        const auto want = gauss_sum_closed_form(p, m);
        CHECK(std::abs(z.real() - want.real()) < 1e-9);
        CHECK(std::abs(z.imag() - want.imag()) < 1e-9);
    }
}

TEST_CASE("quadratic sums") {
    const Field gf3 = Field::build(3, 1);
    const auto g = gauss_sum(gf3);
    const FieldElement one{1}, zero{0};
    CHECK(quadratic_sum(gf3, one, zero, zero) == g);
    // x^2 + 1 over F_3: zeta + zeta^2 + zeta^2
    CHECK(quadratic_sum(gf3, one, zero, one) == from(3, {0, 1, 2}));
    CHECK(quadratic_sum(gf3, one, zero, one) == CyclotomicInt::root_power(3, 1) * g);

    CHECK_THROWS_AS(quadratic_sum(gf3, zero, one, one), Error);
    CHECK_THROWS_AS(quadratic_sum(Field::build(2, 2), one, one, one), Error);

    SUBCASE("a2 (x + c)^2 is independent of c") {
        const Field f = Field::build(5, 2);
        const FieldElement a2{7};
        const auto base = quadratic_sum(f, a2, zero, zero);
        for (auto c : f.elements()) {
            // a2 x^2 + 2 a2 c x + a2 c^2
            const auto a1 = f.mul(f.from_integer(2), f.mul(a2, c));
            const auto a0 = f.mul(a2, f.mul(c, c));
            CHECK(quadratic_sum(f, a2, a1, a0) == base);
        }
    }
}

TEST_CASE("quadratic sum closed form on random triples") {
    std::mt19937_64 rng(rscwe::testing::kSeed);
    for (auto [p, m] : rscwe::testing::prime_powers(81, true)) {
        const Field f = Field::build(p, m);
        const auto g = gauss_sum(f);
        for (int i = 0; i < 100; ++i) {
            const auto a2 = rscwe::testing::random_nonzero(f, rng);
            const auto a1 = rscwe::testing::random_element(f, rng);
            const auto a0 = rscwe::testing::random_element(f, rng);
            REQUIRE(quadratic_sum(f, a2, a1, a0) == quadratic_sum_closed_form(f, g, a2, a1, a0));
        }
    }
}

TEST_CASE("complex embedding") {
    const auto one = CyclotomicInt::constant(3, 1).embed();
    CHECK(one.real() == doctest::Approx(1.0));
    CHECK(one.imag() == doctest::Approx(0.0));
    const auto z = CyclotomicInt::root_power(3, 1).embed();
    CHECK(z.real() == doctest::Approx(-0.5));
    CHECK(z.imag() == doctest::Approx(0.8660254037844386));
}
