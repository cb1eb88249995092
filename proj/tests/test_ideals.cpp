#include <doctest.h>

#include <random>

#include "oracle_ideals.hpp"
#include "selcsa/errors.hpp"
#include "selcsa/ideals.hpp"

using namespace selcsa;

TEST_CASE("prime ideals in Hermite form") {
    BaseField k = BaseField::imaginary_quadratic(-23);
    auto above2 = prime_ideals_above(k, 2);
    ZIdeal p = ideal_from_prime(k, above2[0]);
    CHECK(p.norm() == 2);
    CHECK(ideal_contains(k, p, QuadInt{2, 0}));
    CHECK(ideal_contains(k, p, QuadInt{-above2[0].root, 1}));
    CHECK(!ideal_contains(k, p, QuadInt{1, 0}));

    ZIdeal inert = ideal_from_prime(k, prime_ideals_above(k, 5)[0]);
    CHECK(inert.norm() == 25);
    CHECK(ideal_contains(k, inert, QuadInt{5, 5}));
    CHECK(!ideal_contains(k, inert, QuadInt{0, 1}));
}

TEST_CASE("principal ideals and norms") {
    BaseField k = BaseField::imaginary_quadratic(-23);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        QuadInt x{(i64)(rng() % 21) - 10, (i64)(rng() % 21) - 10};
        if (x == QuadInt{0, 0}) continue;
        ZIdeal I = ideal_from_element(k, x);
        CHECK(I.norm() == qnorm(k, x));
        CHECK(ideal_contains(k, I, x));
        CHECK(ideal_contains(k, I, qmul(k, x, QuadInt{3, 2})));
        auto gen = principal_generator(k, I);
        REQUIRE(gen.has_value());
        CHECK(ideal_from_element(k, *gen) == I);
    }
}

TEST_CASE("multiplication is commutative and norm-multiplicative") {
    std::mt19937_64 rng(17);
    for (i64 D : {-20, -23, -47}) {
        BaseField k = BaseField::imaginary_quadratic(D);
        auto pool = testing::ideals_of_norm_up_to(k, 30);
        for (int i = 0; i < 150; ++i) {
            const ZIdeal& I = pool[rng() % pool.size()];
            const ZIdeal& J = pool[rng() % pool.size()];
            ZIdeal prod = ideal_mul(k, I, J);
            CHECK(prod == ideal_mul(k, J, I));
            CHECK(prod.norm() == I.norm() * J.norm());
        }
    }
}

TEST_CASE("ideal times its conjugate is the norm ideal") {
    for (i64 D : {-20, -23, -47}) {
        BaseField k = BaseField::imaginary_quadratic(D);
        for (const auto& I : testing::ideals_of_norm_up_to(k, 40))
            CHECK(ideal_mul(k, I, ideal_conj(k, I)) == ZIdeal{I.norm(), 1, 0});
    }
}

TEST_CASE("valuations") {
    BaseField k = BaseField::imaginary_quadratic(-23);
    auto p2 = prime_ideals_above(k, 2)[0];
    auto p2bar = prime_ideals_above(k, 2)[1];
    // 2 = p * pbar, each to the first power
    CHECK(ideal_valuation(k, p2, QuadInt{2, 0}) == 1);
    CHECK(ideal_valuation(k, p2bar, QuadInt{2, 0}) == 1);
    CHECK(ideal_valuation(k, p2, QuadInt{4, 0}) == 2);
    CHECK(ideal_valuation(k, p2, QuadInt{3, 0}) == 0);
    auto p23 = prime_ideals_above(k, 23)[0];
    CHECK(ideal_valuation(k, p23, QuadInt{23, 0}) == 2);    // ramified
    CHECK(ideal_valuation(k, p23, QuadInt{-1, 2}) == 1);    // sqrt(-23)
    CHECK_THROWS_AS(ideal_valuation(k, p2, QuadInt{0, 0}), ValidationError);
}

TEST_CASE("nonprincipal ideals have no generator") {
    BaseField k = BaseField::imaginary_quadratic(-23);
    ZIdeal p2 = ideal_from_prime(k, prime_ideals_above(k, 2)[0]);
    CHECK(!principal_generator(k, p2).has_value());
    // but its cube is principal (class order 3)
    ZIdeal cube = ideal_mul(k, ideal_mul(k, p2, p2), p2);
    CHECK(principal_generator(k, cube).has_value());
}

TEST_CASE("ideal from several generators") {
    BaseField k = BaseField::imaginary_quadratic(-20);
    // (2, 1 + omega) is the ramified prime above 2 (omega = sqrt(-5))
    ZIdeal I = ideal_from_generators(k, {QuadInt{2, 0}, QuadInt{1, 1}});
    CHECK(I == ideal_from_prime(k, prime_ideals_above(k, 2)[0]));
    CHECK(I.norm() == 2);
    CHECK(!principal_generator(k, I).has_value());
}

TEST_CASE("brute-force class numbers agree with the known values") {
    const std::vector<std::pair<i64, int>> expected = {
        {-3, 1}, {-4, 1}, {-7, 1}, {-8, 1}, {-11, 1}, {-15, 2},
        {-20, 2}, {-23, 3}, {-24, 2}, {-31, 3}, {-47, 5},
    };
    for (auto& [D, h] : expected)
        CHECK(testing::brute_force_class_number(BaseField::imaginary_quadratic(D)) == h);
}
