#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace selcsa {

using i64 = std::int64_t;
using i128 = __int128;

i64 gcd_i64(i64 a, i64 b);

// g = a*x + b*y with g = gcd(|a|, |b|).
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

// Least nonnegative residue.
i64 mod_floor(i64 a, i64 m);

// Modular inverse; requires gcd(a, m) == 1.
i64 mod_inv(i64 a, i64 m);

i64 mod_pow(i64 base, i64 exp, i64 m);

bool is_prime_i64(i64 n);

// Rational primes in [2, bound].
std::vector<i64> primes_up_to(i64 bound);

// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<i64, int>> factorize(i64 n);

// Kronecker symbol (a|n) for n > 0.
int kronecker(i64 a, i64 n);

// Integer square root (floor); returns -1 when n < 0.
i64 isqrt_i64(i64 n);

// In-place row Hermite normal form of an integer matrix (row-echelon with
// positive pivots and entries above each pivot reduced); returns the rank.
int hnf_integer(std::vector<std::vector<i64>>& rows);

// Exact rational with i64 numerator/denominator, always normalized with
// den > 0 and gcd(num, den) = 1.
struct Frac {
    i64 num = 0;
    i64 den = 1;

    Frac() = default;
    Frac(i64 n, i64 d = 1);

    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac operator-() const { return Frac(-num, den); }
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    std::string str() const;
};

}  // namespace selcsa
