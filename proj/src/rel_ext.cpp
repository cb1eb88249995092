#include "selcsa/rel_ext.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "selcsa/errors.hpp"
#include "selcsa/ideals.hpp"

namespace selcsa {

QuadInt poly_eval(const BaseField& k, const std::vector<QuadInt>& f, const QuadInt& x) {
    QuadInt acc{0, 0};
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = qadd(qmul(k, acc, x), *it);
    return acc;
}

std::vector<QuadInt> poly_mul_k(const BaseField& k, const std::vector<QuadInt>& f,
                                const std::vector<QuadInt>& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<QuadInt> r(f.size() + g.size() - 1, QuadInt{0, 0});
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = qadd(r[i + j], qmul(k, f[i], g[j]));
    return r;
}

namespace {

bool qis_zero(const QuadInt& x) { return x.a == 0 && x.b == 0; }

// x / y in o_k when the quotient is integral.
std::optional<QuadInt> qdiv_exact(const BaseField& k, const QuadInt& x, const QuadInt& y) {
    i64 ny = qnorm(k, y);
    if (ny == 0) return std::nullopt;
    QuadInt num = qmul(k, x, qconj(k, y));
    if (num.a % ny || num.b % ny) return std::nullopt;
    return QuadInt{num.a / ny, num.b / ny};
}

// All a + b*omega of norm exactly m (m >= 0). Over Q: {m, -m}.
std::vector<QuadInt> elements_of_norm(const BaseField& k, i64 m) {
    std::vector<QuadInt> out;
    if (m < 0) return out;
    if (k.is_rational()) {
        if (m > 0) {
            out.push_back({m, 0});
            out.push_back({-m, 0});
        } else {
            out.push_back({0, 0});
        }
        return out;
    }
    i64 D = k.discriminant();
    i64 t = k.omega_trace(), nw = k.omega_norm();
    // norm = ((2a + t b)^2 + |D| b^2) / 4, so b^2 <= 4m/|D|
    i64 bmax = isqrt_i64(4 * m / (-D));
    for (i64 b = -bmax; b <= bmax; ++b) {
        // a^2 + t b a + (nw b^2 - m) = 0
        i64 disc = t * t * b * b - 4 * (nw * b * b - m);
        if (disc < 0) continue;
        i64 s = isqrt_i64(disc);
        if (s * s != disc) continue;
        for (i64 sign : {1, -1}) {
            if (sign < 0 && s == 0) continue;
            i64 num = -t * b + sign * s;
            if (num % 2) continue;
            out.push_back({num / 2, b});
        }
    }
    return out;
}

// All divisors of x in o_k (up to nothing: associates included), x != 0.
std::vector<QuadInt> all_divisors(const BaseField& k, const QuadInt& x) {
    i64 N = qnorm(k, x);
    if (N < 0) N = -N;
    std::vector<QuadInt> out;
    for (i64 m = 1; m <= N; ++m) {
        if (N % m) continue;
        for (const auto& d : elements_of_norm(k, m))
            if (qdiv_exact(k, x, d)) out.push_back(d);
    }
    // dedupe
    std::sort(out.begin(), out.end(),
              [](const QuadInt& l, const QuadInt& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Square root in o_k, if any.
std::optional<QuadInt> qsqrt(const BaseField& k, const QuadInt& z) {
    if (qis_zero(z)) return QuadInt{0, 0};
    i64 N = qnorm(k, z);
    if (N < 0) return std::nullopt;  // cannot happen for imaginary quadratic
    i64 s = isqrt_i64(N);
    if (s * s != N) return std::nullopt;
    for (const auto& r : elements_of_norm(k, s))
        if (qmul(k, r, r) == z) return r;
    return std::nullopt;
}

// Divide by 2 in o_k (both coordinates even), if possible.
std::optional<QuadInt> qhalf(const QuadInt& x) {
    if (x.a % 2 || x.b % 2) return std::nullopt;
    return QuadInt{x.a / 2, x.b / 2};
}

bool has_linear_factor(const BaseField& k, const std::vector<QuadInt>& f) {
    const QuadInt& c0 = f.front();
    if (qis_zero(c0)) return true;
    for (const auto& r : all_divisors(k, c0)) {
        if (qis_zero(poly_eval(k, f, r))) return true;
        if (qis_zero(poly_eval(k, f, qneg(r)))) return true;
    }
    return false;
}

// Monic quadratic factor x^2 + a x + b of a monic quartic or quintic.
// For each divisor b of the constant term, coefficient matching pins a to
// the roots of an explicit quadratic over k.
bool has_quadratic_factor(const BaseField& k, const std::vector<QuadInt>& f) {
    int n = (int)f.size() - 1;
    const QuadInt& p0 = f[0];
    if (qis_zero(p0)) return true;  // x divides, caught earlier anyway
    auto is_factor = [&](const QuadInt& a, const QuadInt& b) {
        // synthetic division of f by x^2 + a x + b
        std::vector<QuadInt> rem(f.rbegin(), f.rend());  // leading first
        for (size_t i = 0; i + 2 < rem.size(); ++i) {
            QuadInt q = rem[i];
            rem[i + 1] = qsub(rem[i + 1], qmul(k, q, a));
            rem[i + 2] = qsub(rem[i + 2], qmul(k, q, b));
        }
        return qis_zero(rem[rem.size() - 1]) && qis_zero(rem[rem.size() - 2]);
    };
    for (const auto& b : all_divisors(k, p0)) {
        QuadInt c0 = *qdiv_exact(k, p0, b);
        // a satisfies a quadratic obtained by eliminating the cofactor:
        //   n = 4:  a^2 - p3 a + (p2 - b - d) = 0          (d = c0)
        //   n = 5:  b a^2 - (p4 b - c0) a - (b^2 + p1 - p3 b) = 0
        QuadInt A, B, C;
        if (n == 4) {
            A = {1, 0};
            B = qneg(f[3]);
            C = qsub(qsub(f[2], b), c0);
        } else {
            A = b;
            B = qneg(qsub(qmul(k, f[4], b), c0));
            C = qneg(qsub(qadd(qmul(k, b, b), f[1]), qmul(k, f[3], b)));
        }
        if (qis_zero(A)) continue;  // b = 0 handled above
        QuadInt disc = qsub(qmul(k, B, B), qmul(k, QuadInt{4, 0}, qmul(k, A, C)));
        auto s = qsqrt(k, disc);
        if (!s) continue;
        for (const QuadInt& sq : {*s, qneg(*s)}) {
            auto num = qhalf(qsub(qneg(B), sq));
            if (!num) continue;
            auto a = qdiv_exact(k, *num, A);
            if (!a) continue;
            if (is_factor(*a, b)) return true;
        }
    }
    return false;
}

}  // namespace

QuadInt qdet(const BaseField& k, const std::vector<std::vector<QuadInt>>& M) {
    int n = (int)M.size();
    std::vector<QuadInt> dp((size_t)1 << n, QuadInt{0, 0});
    dp[0] = {1, 0};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int row = __builtin_popcount(mask);
        if (row >= n || qis_zero(dp[mask])) continue;
        int parity = 0;
        for (int c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            QuadInt term = qmul(k, dp[mask], M[(size_t)row][(size_t)c]);
            if (parity & 1) term = qneg(term);
            dp[mask | (1u << c)] = qadd(dp[mask | (1u << c)], term);
            ++parity;
        }
    }
    return dp[((size_t)1 << n) - 1];
}

namespace {

QuadInt resultant(const BaseField& k, const std::vector<QuadInt>& f,
                  const std::vector<QuadInt>& g) {
    int df = (int)f.size() - 1, dg = (int)g.size() - 1;
    int n = df + dg;
    std::vector<std::vector<QuadInt>> M((size_t)n, std::vector<QuadInt>((size_t)n, QuadInt{0, 0}));
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) M[(size_t)i][(size_t)(i + j)] = f[(size_t)(df - j)];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) M[(size_t)(dg + i)][(size_t)(i + j)] = g[(size_t)(dg - j)];
    return qdet(k, M);
}

FqPoly reduce_poly(const ResidueField& F, const std::vector<QuadInt>& f) {
    FqPoly r;
    r.coeffs.reserve(f.size());
    for (const auto& c : f) r.coeffs.push_back(F.reduce(c));
    return fq_trim(r);
}

// Factor-degree pattern sieve for degree >= 6 after linear/quadratic
// factors are excluded: a proper factor of degree d over k must reduce to
// a sub-multiset of residue factor degrees summing to d at every prime
// where f stays separable.
bool sieve_proves_irreducible(const BaseField& k, const std::vector<QuadInt>& f) {
    int n = (int)f.size() - 1;
    std::set<int> possible;
    for (int d = 3; d <= n - 3; ++d) possible.insert(d);
    if (possible.empty()) return true;
    for (i64 p : primes_up_to(200)) {
        for (const auto& prime : prime_ideals_above(k, p)) {
            if (prime.type == SplitType::Ramified) continue;
            ResidueField F(k, prime);
            FqPoly fbar = reduce_poly(F, f);
            if (fbar.degree() != n) continue;
            if (fq_gcd(F, fbar, fq_derivative(F, fbar)).degree() != 0) continue;
            auto factors = fq_factor(F, fbar);
            // subset sums of residue factor degrees
            std::vector<bool> reachable((size_t)n + 1, false);
            reachable[0] = true;
            for (auto& [g, e] : factors) {
                (void)e;
                for (int s = n - g.degree(); s >= 0; --s)
                    if (reachable[(size_t)s]) reachable[(size_t)(s + g.degree())] = true;
            }
            for (auto it = possible.begin(); it != possible.end();)
                it = reachable[(size_t)*it] ? std::next(it) : possible.erase(it);
            if (possible.empty()) return true;
        }
    }
    return false;
}

void check_irreducible(const BaseField& k, const std::vector<QuadInt>& f) {
    int n = (int)f.size() - 1;
    if (has_linear_factor(k, f))
        throw ValidationError("polynomial has a root in the base ring; not irreducible");
    if (n >= 4 && has_quadratic_factor(k, f))
        throw ValidationError("polynomial has a quadratic factor over the base field");
    if (n >= 6 && !sieve_proves_irreducible(k, f))
        throw ValidationError(
            "could not certify irreducibility: factorization patterns admit a proper factor");
}

}  // namespace

RelativeExtension RelativeExtension::create(const BaseField& base, std::vector<QuadInt> min_poly) {
    while (!min_poly.empty() && qis_zero(min_poly.back())) min_poly.pop_back();
    if (min_poly.size() < 4)
        throw ValidationError("extension degree must be at least 3");
    if (min_poly.back() != QuadInt{1, 0})
        throw ValidationError("minimal polynomial must be monic");
    if (base.is_rational())
        for (const auto& c : min_poly)
            if (c.b != 0) throw ValidationError("nonrational coefficient over Q");
    check_irreducible(base, min_poly);
    return RelativeExtension(base, std::move(min_poly));
}

QuadInt RelativeExtension::poly_discriminant() const {
    int n = degree();
    std::vector<QuadInt> deriv((size_t)n);
    for (int i = 1; i <= n; ++i)
        deriv[(size_t)(i - 1)] = qmul(base_, QuadInt{i, 0}, min_poly_[(size_t)i]);
    QuadInt res = resultant(base_, min_poly_, deriv);
    // monic leading coefficient; only the sign twist remains
    if ((i64)(n) * (n - 1) / 2 % 2) res = qneg(res);
    return res;
}

namespace {

// y in o_k/p with c = pi * y (mod p^2); requires c in p and v_p(pi) = 1.
ResidueField::Elem divide_in_residue(const BaseField& k, const ResidueField& F, const ZIdeal& P2,
                                     const QuadInt& pi, const QuadInt& c) {
    // fast path: rational uniformizer p dividing both coordinates
    if (pi.b == 0 && c.a % pi.a == 0 && c.b % pi.a == 0)
        return F.reduce({c.a / pi.a, c.b / pi.a});
    i64 p = F.p();
    for (i64 u = 0; u < p; ++u)
        for (i64 v = 0; v < (F.quadratic() ? p : 1); ++v) {
            QuadInt y{u, v};
            if (ideal_contains(k, P2, qsub(c, qmul(k, pi, y)))) return F.reduce(y);
        }
    throw std::logic_error("uniformizer division failed; element not divisible");
}

// A generator of p / p^2 (valuation exactly 1 at the prime).
QuadInt uniformizer(const BaseField& k, const PrimeIdeal& prime) {
    if (prime.type == SplitType::Rational || prime.type == SplitType::Inert)
        return {prime.p, 0};
    for (const QuadInt& cand : {QuadInt{-prime.root, 1}, QuadInt{prime.p - prime.root, 1}})
        if (ideal_valuation(k, prime, cand, 2) == 1) return cand;
    throw std::logic_error("no uniformizer among omega - root shifts");
}

bool fq_poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.coeffs.size(); i-- > 0;) {
        if (a.coeffs[i].u != b.coeffs[i].u) return a.coeffs[i].u < b.coeffs[i].u;
        if (a.coeffs[i].v != b.coeffs[i].v) return a.coeffs[i].v < b.coeffs[i].v;
    }
    return false;
}

}  // namespace

SplittingDatum splitting_type(const RelativeExtension& ext, const PrimeIdeal& prime,
                              std::uint64_t seed) {
    const BaseField& k = ext.base();
    if (k.is_rational() != (prime.type == SplitType::Rational))
        throw ValidationError("prime does not belong to the base field");
    ResidueField F(k, prime);
    FqPoly fbar = reduce_poly(F, ext.min_poly());
    auto factors = fq_factor(F, fbar, seed);
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return fq_poly_less(x.first, y.first);
    });

    SplittingDatum datum;
    datum.prime = prime;
    bool squarefree = true;
    for (auto& [g, e] : factors) {
        datum.factors.emplace_back(e, g.degree());
        if (e > 1) squarefree = false;
    }
    if (squarefree) {
        datum.certified = true;  // p does not divide disc(f)
        return datum;
    }

    // Dedekind criterion: with g = prod g_i, h = f/g lifted to o_k[x] and
    // T = (g h - f)/pi, the monogenic order is maximal at p iff
    // gcd(T mod p, g, h) = 1.
    FqPoly gbar = fq_one(F), hbar = fq_one(F);
    for (auto& [g, e] : factors) {
        gbar = fq_mul(F, gbar, g);
        for (int i = 1; i < e; ++i) hbar = fq_mul(F, hbar, g);
    }
    auto lift_poly = [&](const FqPoly& f) {
        std::vector<QuadInt> out;
        out.reserve(f.coeffs.size());
        for (const auto& c : f.coeffs) out.push_back(F.lift(c));
        return out;
    };
    std::vector<QuadInt> prod = poly_mul_k(k, lift_poly(gbar), lift_poly(hbar));
    std::vector<QuadInt> U(std::max(prod.size(), ext.min_poly().size()), QuadInt{0, 0});
    for (size_t i = 0; i < prod.size(); ++i) U[i] = prod[i];
    for (size_t i = 0; i < ext.min_poly().size(); ++i) U[i] = qsub(U[i], ext.min_poly()[i]);

    QuadInt pi = uniformizer(k, prime);
    ZIdeal P = ideal_from_prime(k, prime);
    ZIdeal P2 = ideal_mul(k, P, P);
    FqPoly Tbar;
    Tbar.coeffs.reserve(U.size());
    for (const auto& c : U) {
        if (!qis_zero(c) && !ideal_contains(k, P, c))
            throw std::logic_error("g*h - f has a coefficient outside the prime");
        Tbar.coeffs.push_back(divide_in_residue(k, F, P2, pi, c));
    }
    FqPoly common = fq_gcd(F, fq_gcd(F, fq_trim(Tbar), gbar), hbar);
    datum.certified = common.degree() == 0;
    return datum;
}

std::vector<PrimeIdeal> maximality_check(const RelativeExtension& ext, std::uint64_t seed) {
    const BaseField& k = ext.base();
    QuadInt disc = ext.poly_discriminant();
    if (qis_zero(disc)) throw ValidationError("polynomial is not separable");
    i64 N = qnorm(k, disc);
    if (N < 0) N = -N;

    std::vector<PrimeIdeal> bad;
    for (auto& [p, e] : factorize(N)) {
        (void)e;
        for (const auto& prime : prime_ideals_above(k, p)) {
            if (!ideal_contains(k, ideal_from_prime(k, prime), disc)) continue;
            if (!splitting_type(ext, prime, seed).certified) bad.push_back(prime);
        }
    }
    return bad;
}

NormSubgroup norm_class_subgroup(const RelativeExtension& ext, const ClassGroup& g, i64 bound,
                                 std::uint64_t seed) {
    if (bound < 2) throw ValidationError("sampling bound must be at least 2");
    if (ext.base() != g.field()) throw ValidationError("class group is for a different base field");

    std::vector<int> gens = {g.identity()};
    Subgroup cur = Subgroup::trivial(g);
    i64 last_growth = 0;
    std::vector<PrimeIdeal> skipped;
    for (i64 p : primes_up_to(bound)) {
        for (const auto& prime : prime_ideals_above(ext.base(), p)) {
            auto datum = splitting_type(ext, prime, seed);
            if (!datum.certified) {
                skipped.push_back(prime);
                continue;
            }
            int cls = g.index_of(ideal_class(ext.base(), g, prime));
            for (auto& [e, f] : datum.factors) {
                int contrib = g.power(cls, (i64)e * f);
                if (cur.contains(contrib)) continue;
                gens.push_back(contrib);
                cur = Subgroup::generated(g, gens);
                last_growth = p;
            }
        }
    }
    return NormSubgroup{cur, bound, last_growth <= bound / 2, std::move(skipped)};
}

i64 intersection_degree_hilbert(const RelativeExtension& ext, const ClassGroup& g, i64 bound,
                                std::uint64_t seed) {
    return norm_class_subgroup(ext, g, bound, seed).subgroup.index();
}

}  // namespace selcsa
