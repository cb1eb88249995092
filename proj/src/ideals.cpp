#include "selcsa/ideals.hpp"

#include <stdexcept>
#include <vector>

#include "selcsa/errors.hpp"

namespace selcsa {

std::string ZIdeal::str() const {
    std::string s;
    if (c != 1) s += std::to_string(c) + "*";
    s += "[" + std::to_string(a) + ", " + std::to_string(b) + "+w]";
    return s;
}

namespace {

// Hermite form of the Z-module spanned by (x_i, y_i) in coordinates (1, omega).
// The result is the pair of rows (c*a, 0), (c*b, c).
ZIdeal hnf_rows(std::vector<std::pair<i64, i64>> rows) {
    // c = gcd of omega-coordinates, realized by an integer combination
    i64 c = 0, B = 0;
    for (auto& [x, y] : rows) {
        if (y == 0) continue;
        if (c == 0) {
            c = y < 0 ? -y : y;
            B = y < 0 ? -x : x;
        } else {
            i64 u, v;
            i64 g = ext_gcd(c, y, u, v);
            B = u * B + v * x;
            c = g;
        }
    }
    if (c == 0) {
        // purely rational module
        i64 m = 0;
        for (auto& [x, y] : rows) {
            (void)y;
            m = gcd_i64(m, x);
        }
        if (m == 0) throw std::invalid_argument("hnf_rows: zero module");
        return ZIdeal{m, 1, 0};
    }
    // clear the omega coordinate of every row and gcd the remainders
    i64 m = 0;
    for (auto& [x, y] : rows) m = gcd_i64(m, x - (y / c) * B);
    if (m == 0) throw std::invalid_argument("hnf_rows: rank-deficient module");
    if (m % c) throw std::logic_error("hnf_rows: module is not an o_k-ideal");
    i64 a = m / c;
    B = mod_floor(B, m);
    if (B % c) throw std::logic_error("hnf_rows: module is not an o_k-ideal");
    return ZIdeal{c, a, B / c};
}

}  // namespace

ZIdeal ideal_from_prime(const BaseField& k, const PrimeIdeal& prime) {
    if (k.is_rational()) return ZIdeal{prime.p, 1, 0};
    switch (prime.type) {
        case SplitType::Inert:
            return ZIdeal{prime.p, 1, 0};
        case SplitType::Split:
        case SplitType::Ramified:
            return ZIdeal{1, prime.p, mod_floor(-prime.root, prime.p)};
        case SplitType::Rational:
            throw ValidationError("rational prime marker used over a quadratic field");
    }
    throw std::logic_error("unreachable");
}

ZIdeal ideal_from_element(const BaseField& k, const QuadInt& alpha) {
    if (alpha.a == 0 && alpha.b == 0) throw ValidationError("zero element generates no ideal");
    if (k.is_rational()) {
        if (alpha.b != 0) throw ValidationError("nonrational element over Q");
        return ZIdeal{alpha.a < 0 ? -alpha.a : alpha.a, 1, 0};
    }
    return ideal_from_generators(k, {alpha});
}

ZIdeal ideal_from_generators(const BaseField& k, const std::vector<QuadInt>& gens) {
    std::vector<std::pair<i64, i64>> rows;
    for (const auto& g : gens) {
        rows.emplace_back(g.a, g.b);
        QuadInt gw = qmul(k, g, QuadInt{0, 1});
        rows.emplace_back(gw.a, gw.b);
    }
    return hnf_rows(std::move(rows));
}

ZIdeal ideal_mul(const BaseField& k, const ZIdeal& I, const ZIdeal& J) {
    if (k.is_rational()) return ZIdeal{I.c * J.c, 1, 0};
    QuadInt gi1{I.c * I.a, 0}, gi2{I.c * I.b, I.c};
    QuadInt gj1{J.c * J.a, 0}, gj2{J.c * J.b, J.c};
    std::vector<std::pair<i64, i64>> rows;
    for (const auto& x : {gi1, gi2})
        for (const auto& y : {gj1, gj2}) {
            QuadInt p = qmul(k, x, y);
            rows.emplace_back(p.a, p.b);
            // include omega * product so the span is an o_k-module
            QuadInt pw = qmul(k, p, QuadInt{0, 1});
            rows.emplace_back(pw.a, pw.b);
        }
    return hnf_rows(std::move(rows));
}

ZIdeal ideal_conj(const BaseField& k, const ZIdeal& I) {
    if (k.is_rational()) return I;
    // conj(b + omega) = (b + t) - omega = -( -(b+t) + omega )
    i64 t = k.omega_trace();
    return ZIdeal{I.c, I.a, mod_floor(-(I.b + t), I.a)};
}

bool ideal_contains(const BaseField& k, const ZIdeal& I, const QuadInt& x) {
    if (k.is_rational()) return x.b == 0 && x.a % I.c == 0;
    if (x.b % I.c) return false;
    i64 t = x.b / I.c;
    i64 rem = x.a - t * I.c * I.b;
    return rem % (I.c * I.a) == 0;
}

int ideal_valuation(const BaseField& k, const PrimeIdeal& prime, const QuadInt& x, int cap) {
    if (x.a == 0 && x.b == 0) throw ValidationError("valuation of zero");
    ZIdeal P = ideal_from_prime(k, prime);
    ZIdeal power = P;
    int v = 0;
    while (v < cap && ideal_contains(k, power, x)) {
        ++v;
        power = ideal_mul(k, power, P);
    }
    return v;
}

std::optional<QuadInt> principal_generator(const BaseField& k, const ZIdeal& I) {
    if (k.is_rational()) return QuadInt{I.c, 0};
    i64 N = I.norm();
    i64 D = k.discriminant();
    i64 t = k.omega_trace(), nw = k.omega_norm();
    i64 vmax = isqrt_i64(4 * N / (-D)) + 1;
    for (i64 v = -vmax; v <= vmax; ++v) {
        // u^2 + t u v + nw v^2 = N
        i64 disc = t * t * v * v - 4 * (nw * v * v - N);
        if (disc < 0) continue;
        i64 s = isqrt_i64(disc);
        if (s * s != disc) continue;
        for (i64 sign : {1, -1}) {
            i64 num = -t * v + sign * s;
            if (num % 2) continue;
            QuadInt alpha{num / 2, v};
            if (qnorm(k, alpha) != N) continue;
            if (ideal_from_element(k, alpha) == I) return alpha;
        }
    }
    return std::nullopt;
}

}  // namespace selcsa
