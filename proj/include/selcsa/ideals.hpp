#pragma once

#include <optional>
#include <string>

#include "selcsa/base_field.hpp"

namespace selcsa {

// Nonzero integral ideal of o_k in Hermite form c * [a, b + omega] with
// c, a >= 1 and 0 <= b < a; the Z-basis is {c*a, c*b + c*omega}.
// Over Q the ideal is the integer c (a = 1, b = 0).
struct ZIdeal {
    i64 c = 1;
    i64 a = 1;
    i64 b = 0;

    i64 norm() const { return c * c * a; }
    bool is_unit_ideal() const { return c == 1 && a == 1; }
    std::string str() const;
    bool operator==(const ZIdeal& o) const { return c == o.c && a == o.a && b == o.b; }
    bool operator!=(const ZIdeal& o) const { return !(*this == o); }
};

ZIdeal ideal_from_prime(const BaseField& k, const PrimeIdeal& prime);
ZIdeal ideal_from_element(const BaseField& k, const QuadInt& alpha);
// Smallest ideal containing all the given generators (as o_k-module).
ZIdeal ideal_from_generators(const BaseField& k, const std::vector<QuadInt>& gens);
ZIdeal ideal_mul(const BaseField& k, const ZIdeal& I, const ZIdeal& J);
ZIdeal ideal_conj(const BaseField& k, const ZIdeal& I);
bool ideal_contains(const BaseField& k, const ZIdeal& I, const QuadInt& x);
// Largest j <= cap with x in P^j (x != 0).
int ideal_valuation(const BaseField& k, const PrimeIdeal& prime, const QuadInt& x, int cap = 64);
// Exhaustive search for a generator of norm equal to the ideal norm.
std::optional<QuadInt> principal_generator(const BaseField& k, const ZIdeal& I);

}  // namespace selcsa
