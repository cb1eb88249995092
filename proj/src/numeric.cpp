#include "selcsa/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace selcsa {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mod_inv(i64 a, i64 m) {
    i64 x, y;
    i64 g = ext_gcd(mod_floor(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("mod_inv: arguments not coprime");
    return mod_floor(x, m);
}

i64 mod_pow(i64 base, i64 exp, i64 m) {
    i64 result = 1 % m;
    base = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) result = (i64)((i128)result * base % m);
        base = (i64)((i128)base * base % m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_i64(i64 n) {
    if (n < 2) return false;
    for (i64 d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = (i64)((i128)x * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<i64> primes_up_to(i64 bound) {
    std::vector<i64> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (i64 p = 2; p <= bound; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        out.push_back(p);
        for (i64 q = p * p; q <= bound; q += p) sieve[static_cast<size_t>(q)] = false;
    }
    return out;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        i64 r = mod_floor(a, 8);
        if (r % 2 == 0) return 0;
        if (r == 3 || r == 5) result = -result;
    }
    a = mod_floor(a, n);
    // Jacobi symbol (a|n) with n odd > 0
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a = mod_floor(a, n);
    }
    return (n == 1) ? result : 0;
}

i64 isqrt_i64(i64 n) {
    if (n < 0) return -1;
    i64 r = (i64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Frac::Frac(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = gcd_i64(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Frac Frac::operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
Frac Frac::operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
Frac Frac::operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
Frac Frac::operator/(const Frac& o) const {
    if (o.num == 0) throw std::invalid_argument("Frac: division by zero");
    return Frac(num * o.den, den * o.num);
}

std::string Frac::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int hnf_integer(std::vector<std::vector<i64>>& rows) {
    int m = rows.empty() ? 0 : (int)rows[0].size();
    int r = 0;
    for (int col = 0; col < m && r < (int)rows.size(); ++col) {
        // gcd elimination below row r
        while (true) {
            int pivot = -1;
            for (int i = r; i < (int)rows.size(); ++i) {
                if (rows[(size_t)i][(size_t)col] == 0) continue;
                if (pivot == -1 || std::llabs(rows[(size_t)i][(size_t)col]) <
                                       std::llabs(rows[(size_t)pivot][(size_t)col]))
                    pivot = i;
            }
            if (pivot == -1) break;
            std::swap(rows[(size_t)r], rows[(size_t)pivot]);
            bool clean = true;
            for (int i = r + 1; i < (int)rows.size(); ++i) {
                i64 q = rows[(size_t)i][(size_t)col] / rows[(size_t)r][(size_t)col];
                if (q != 0)
                    for (int j = 0; j < m; ++j)
                        rows[(size_t)i][(size_t)j] -= q * rows[(size_t)r][(size_t)j];
                if (rows[(size_t)i][(size_t)col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[(size_t)r][(size_t)col] == 0) continue;
        if (rows[(size_t)r][(size_t)col] < 0)
            for (int j = 0; j < m; ++j) rows[(size_t)r][(size_t)j] = -rows[(size_t)r][(size_t)j];
        for (int i = 0; i < r; ++i) {
            i64 q = rows[(size_t)i][(size_t)col] / rows[(size_t)r][(size_t)col];
            if (rows[(size_t)i][(size_t)col] % rows[(size_t)r][(size_t)col] < 0) --q;
            if (q != 0)
                for (int j = 0; j < m; ++j)
                    rows[(size_t)i][(size_t)j] -= q * rows[(size_t)r][(size_t)j];
        }
        ++r;
    }
    return r;
}

}  // namespace selcsa
