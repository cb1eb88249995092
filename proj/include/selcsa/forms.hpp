#pragma once

#include <string>
#include <vector>

#include "selcsa/numeric.hpp"

namespace selcsa {

// Positive definite binary quadratic form a x^2 + b xy + c y^2 of negative
// discriminant b^2 - 4ac. Reduced means |b| <= a <= c with b >= 0 whenever
// |b| = a or a = c; reduced forms are unique in their class.
struct QuadForm {
    i64 a = 1;
    i64 b = 0;
    i64 c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    std::string str() const;

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }
    // lexicographic (a, b, c); used as the deterministic enumeration order
    bool operator<(const QuadForm& o) const;
};

// Principal form of discriminant D.
QuadForm principal_form(i64 D);

// Reduce a positive definite form to its unique reduced representative.
QuadForm reduce_form(QuadForm f);

// Gaussian composition via united forms; inputs must share a discriminant.
QuadForm compose_forms(const QuadForm& f, const QuadForm& g);

QuadForm inverse_form(const QuadForm& f);

// All reduced (primitive) forms of fundamental discriminant D < 0, sorted.
std::vector<QuadForm> reduced_forms(i64 D);

}  // namespace selcsa
