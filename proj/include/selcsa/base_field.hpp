#pragma once

#include <string>
#include <vector>

#include "selcsa/numeric.hpp"

namespace selcsa {

// The base field k: the rationals (discriminant 0) or an imaginary
// quadratic field given by a negative fundamental discriminant.
//
// For quadratic k the ring of integers is Z[omega] with
//   omega = sqrt(D/4)        when D = 0 mod 4   (omega^2 = D/4)
//   omega = (1 + sqrt(D))/2  when D = 1 mod 4   (omega^2 = omega + (D-1)/4)
// so omega satisfies x^2 - t x + nw with t = omega_trace, nw = omega_norm.
class BaseField {
public:
    static BaseField rationals();
    // Validates that D is a negative fundamental discriminant.
    static BaseField imaginary_quadratic(i64 D);
    // Dispatches on D == 0.
    static BaseField from_discriminant(i64 D);

    i64 discriminant() const { return disc_; }
    bool is_rational() const { return disc_ == 0; }
    int degree() const { return disc_ == 0 ? 1 : 2; }
    i64 omega_trace() const;
    i64 omega_norm() const;
    std::string str() const;

    bool operator==(const BaseField& o) const { return disc_ == o.disc_; }
    bool operator!=(const BaseField& o) const { return disc_ != o.disc_; }

private:
    explicit BaseField(i64 D) : disc_(D) {}
    i64 disc_ = 0;
};

// Element a + b*omega of o_k (b = 0 identically over Q).
struct QuadInt {
    i64 a = 0;
    i64 b = 0;
    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
};

QuadInt qadd(const QuadInt& x, const QuadInt& y);
QuadInt qsub(const QuadInt& x, const QuadInt& y);
QuadInt qneg(const QuadInt& x);
QuadInt qmul(const BaseField& k, const QuadInt& x, const QuadInt& y);
QuadInt qconj(const BaseField& k, const QuadInt& x);
i64 qnorm(const BaseField& k, const QuadInt& x);
std::string qstr(const QuadInt& x);

// Determinant of a square QuadInt matrix by subset DP over columns.
QuadInt qdet(const BaseField& k, const std::vector<std::vector<QuadInt>>& M);

enum class SplitType {
    Rational,  // prime of Q itself (k = Q)
    Split,
    Inert,
    Ramified,
};

// A prime ideal of o_k. For Split/Ramified primes the ideal is
// (p, omega - root) in Hermite form [p, -root + omega]; Inert primes are (p).
struct PrimeIdeal {
    i64 p = 0;
    SplitType type = SplitType::Rational;
    i64 root = 0;  // omega = root (mod the ideal); 0 for Inert/Rational
    int e = 1;     // ramification index over Q
    int f = 1;     // residue degree over Q

    i64 norm() const;
    std::string str() const;
    bool operator==(const PrimeIdeal& o) const {
        return p == o.p && type == o.type && root == o.root;
    }
    bool operator!=(const PrimeIdeal& o) const { return !(*this == o); }
};

// All primes of k above the rational prime p, with e*f*g = [k:Q].
std::vector<PrimeIdeal> prime_ideals_above(const BaseField& k, i64 p);

}  // namespace selcsa
