#include <doctest.h>

#include <random>

#include "selcsa/base_field.hpp"
#include "selcsa/errors.hpp"

using namespace selcsa;

TEST_CASE("fundamental discriminant validation") {
    for (i64 D : {-3, -4, -7, -8, -11, -15, -20, -23, -24, -31, -47})
        CHECK(BaseField::imaginary_quadratic(D).discriminant() == D);
    CHECK_THROWS_AS(BaseField::imaginary_quadratic(-5), ValidationError);   // 3 mod 4
    CHECK_THROWS_AS(BaseField::imaginary_quadratic(-9), ValidationError);   // not squarefree
    CHECK_THROWS_AS(BaseField::imaginary_quadratic(-12), ValidationError);  // -12/4 = -3 is 1 mod 4
    CHECK_THROWS_AS(BaseField::imaginary_quadratic(-18), ValidationError);
    CHECK_THROWS_AS(BaseField::imaginary_quadratic(5), ValidationError);
    CHECK_THROWS_AS(BaseField::imaginary_quadratic(0), ValidationError);
    CHECK(BaseField::from_discriminant(0).is_rational());
    CHECK(BaseField::from_discriminant(-23).degree() == 2);
}

TEST_CASE("omega satisfies its minimal polynomial") {
    for (i64 D : {-3, -4, -7, -8, -20, -23, -24, -47}) {
        BaseField k = BaseField::imaginary_quadratic(D);
        QuadInt omega{0, 1};
        QuadInt sq = qmul(k, omega, omega);
        // omega^2 - t*omega + nw = 0
        QuadInt check = qadd(qsub(sq, qmul(k, QuadInt{k.omega_trace(), 0}, omega)),
                             QuadInt{k.omega_norm(), 0});
        CHECK(check == QuadInt{0, 0});
        // trace and norm of omega via conjugate
        CHECK(qadd(omega, qconj(k, omega)) == QuadInt{k.omega_trace(), 0});
        CHECK(qmul(k, omega, qconj(k, omega)) == QuadInt{k.omega_norm(), 0});
    }
}

TEST_CASE("norm is multiplicative and positive definite") {
    std::mt19937_64 rng(11);
    for (i64 D : {-4, -20, -23}) {
        BaseField k = BaseField::imaginary_quadratic(D);
        for (int i = 0; i < 200; ++i) {
            QuadInt x{(i64)(rng() % 41) - 20, (i64)(rng() % 41) - 20};
            QuadInt y{(i64)(rng() % 41) - 20, (i64)(rng() % 41) - 20};
            CHECK(qnorm(k, qmul(k, x, y)) == qnorm(k, x) * qnorm(k, y));
            if (x != QuadInt{0, 0}) CHECK(qnorm(k, x) > 0);
        }
    }
}

TEST_CASE("prime splitting in Q(sqrt(-23))") {
    BaseField k = BaseField::imaginary_quadratic(-23);
    auto above2 = prime_ideals_above(k, 2);  // -23 = 1 mod 8
    REQUIRE(above2.size() == 2);
    CHECK(above2[0].type == SplitType::Split);
    CHECK(above2[0].root == 0);
    CHECK(above2[1].root == 1);
    auto above5 = prime_ideals_above(k, 5);  // (-23|5) = (2|5) = -1
    REQUIRE(above5.size() == 1);
    CHECK(above5[0].type == SplitType::Inert);
    CHECK(above5[0].norm() == 25);
    auto above23 = prime_ideals_above(k, 23);
    REQUIRE(above23.size() == 1);
    CHECK(above23[0].type == SplitType::Ramified);
    CHECK(above23[0].e == 2);
}

TEST_CASE("prime splitting in Q(sqrt(-5))") {
    BaseField k = BaseField::imaginary_quadratic(-20);
    CHECK(prime_ideals_above(k, 2)[0].type == SplitType::Ramified);
    CHECK(prime_ideals_above(k, 5)[0].type == SplitType::Ramified);
    CHECK(prime_ideals_above(k, 3).size() == 2);  // x^2 + 5 = (x-1)(x+1) mod 3
    CHECK(prime_ideals_above(k, 11)[0].type == SplitType::Inert);
    CHECK(prime_ideals_above(k, 29).size() == 2);
}

TEST_CASE("splitting data is internally consistent") {
    for (i64 D : {-3, -4, -8, -20, -23, -47}) {
        BaseField k = BaseField::imaginary_quadratic(D);
        for (i64 p : primes_up_to(100)) {
            int ef_sum = 0;
            for (const auto& prime : prime_ideals_above(k, p)) {
                ef_sum += prime.e * prime.f;
                if (prime.type != SplitType::Inert) {
                    // omega = root must kill omega's minimal polynomial mod p
                    i64 r = prime.root;
                    CHECK(mod_floor(r * r - k.omega_trace() * r + k.omega_norm(), p) == 0);
                    CHECK(r >= 0);
                    CHECK(r < p);
                }
            }
            CHECK(ef_sum == 2);
        }
    }
}

TEST_CASE("rational base has one prime per p") {
    BaseField q = BaseField::rationals();
    for (i64 p : {2, 3, 23}) {
        auto primes = prime_ideals_above(q, p);
        REQUIRE(primes.size() == 1);
        CHECK(primes[0].type == SplitType::Rational);
        CHECK(primes[0].norm() == p);
    }
    CHECK_THROWS_AS(prime_ideals_above(q, 4), ValidationError);
}
