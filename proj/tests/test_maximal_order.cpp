#include "selcsa/maximal_order.hpp"

#include <algorithm>

#include "doctest.h"
#include "selcsa/errors.hpp"

using namespace selcsa;

namespace {

RelativeExtension cubic_over(i64 D) {
    // x^3 - x - 1
    return RelativeExtension::create(BaseField::from_discriminant(D),
                                     {{-1, 0}, {-1, 0}, {0, 0}, {1, 0}});
}

}  // namespace

TEST_CASE("index of a monogenic order that is already maximal") {
    // disc(x^3 - x - 1) = -23 is squarefree over Q and stays so over D = -20.
    CHECK(maximal_order_index(cubic_over(0)).empty());
    CHECK(maximal_order_index(cubic_over(-20)).empty());

    // x^4 - x - 1 over Q(sqrt(-5)): disc = -283, squarefree.
    auto ext = RelativeExtension::create(
        BaseField::imaginary_quadratic(-20),
        {{-1, 0}, {-1, 0}, {0, 0}, {0, 0}, {1, 0}});
    CHECK(maximal_order_index(ext).empty());
}

TEST_CASE("cubic over discriminant -23: index supported at the ramified prime") {
    // disc(x^3 - x - 1) = -23 = disc(k), so the monogenic order has index
    // exactly the ramified prime above 23 (the relative discriminant is
    // trivial and the two square roots of -23 differ by that prime).
    auto idx = maximal_order_index(cubic_over(-23));
    REQUIRE(idx.size() == 1);
    CHECK(idx[0].prime.p == 23);
    CHECK(idx[0].prime.type == SplitType::Ramified);
    CHECK(idx[0].valuation == 1);
}

TEST_CASE("biquadratic-style quartic over discriminant -20") {
    // K = Q(zeta_8, sqrt(5)) via x^4 - 2x^2 + 9 over Q(sqrt(-5)):
    // Z-index of Z[omega, theta] in o_K is 2^10 * 3^2, spread as
    // P_2^10 * P_3 * P_3conj over o_k.
    auto ext = RelativeExtension::create(
        BaseField::imaginary_quadratic(-20),
        {{9, 0}, {0, 0}, {-2, 0}, {0, 0}, {1, 0}});
    auto idx = maximal_order_index(ext);
    REQUIRE(idx.size() == 3);
    std::sort(idx.begin(), idx.end(), [](const IndexDatum& x, const IndexDatum& y) {
        return x.prime.p != y.prime.p ? x.prime.p < y.prime.p : x.prime.root < y.prime.root;
    });
    CHECK(idx[0].prime.p == 2);
    CHECK(idx[0].prime.type == SplitType::Ramified);
    CHECK(idx[0].valuation == 10);
    CHECK(idx[1].prime.p == 3);
    CHECK(idx[1].prime.type == SplitType::Split);
    CHECK(idx[1].valuation == 1);
    CHECK(idx[2].prime.p == 3);
    CHECK(idx[2].prime.type == SplitType::Split);
    CHECK(idx[2].valuation == 1);
    CHECK(idx[1].prime.root != idx[2].prime.root);
}

TEST_CASE("module class of the ring of integers") {
    SUBCASE("maximal monogenic orders give the trivial class") {
        ClassGroup g = ClassGroup::compute(BaseField::imaginary_quadratic(-20));
        CHECK(ring_of_integers_class(cubic_over(-20), g) == g.element(g.identity()));
    }
    SUBCASE("ramified cubic: the prime above 23 is principal, class stays trivial") {
        ClassGroup g = ClassGroup::compute(BaseField::imaginary_quadratic(-23));
        CHECK(ring_of_integers_class(cubic_over(-23), g) == g.element(g.identity()));
    }
    SUBCASE("quartic index P_2^10 P_3 P_3conj is principal in Cl(-20)") {
        // class(P_2) has order 2, class(P_3) * class(P_3conj) = class(3) = e,
        // so the index class is class(P_2)^10 = e and st(o_K) is trivial.
        BaseField k = BaseField::imaginary_quadratic(-20);
        ClassGroup g = ClassGroup::compute(k);
        auto ext = RelativeExtension::create(
            k, {{9, 0}, {0, 0}, {-2, 0}, {0, 0}, {1, 0}});
        CHECK(ring_of_integers_class(ext, g) == g.element(g.identity()));
    }
}
