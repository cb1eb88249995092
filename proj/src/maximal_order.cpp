#include "selcsa/maximal_order.hpp"

#include <algorithm>
#include <stdexcept>

#include "selcsa/errors.hpp"
#include "selcsa/ideals.hpp"

namespace selcsa {

namespace {

constexpr i128 kLimit = (i128)1 << 62;

void check_fits(i128 v) {
    if (v >= kLimit || v <= -kLimit)
        throw OracleUnavailableError(
            "oracle unavailable: maximal-order computation exceeds exact 64-bit range");
}

// The Z-order o_k[theta] with Z-basis e_{j,i} = omega^i * theta^j
// (i < deg k, j < n), index u = j*dk + i, and its multiplication table.
struct SeedOrder {
    BaseField k = BaseField::rationals();
    int n = 0;
    int dk = 1;
    int N = 0;
    // table[s][t][u]: coordinate u of e_s * e_t
    std::vector<std::vector<std::vector<i64>>> table;
};

SeedOrder build_seed(const RelativeExtension& ext) {
    SeedOrder seed;
    seed.k = ext.base();
    seed.n = ext.degree();
    seed.dk = seed.k.degree();
    seed.N = seed.n * seed.dk;
    const BaseField& k = seed.k;
    int n = seed.n;

    // theta^m for m = 0..2n-2, reduced by the minimal polynomial
    std::vector<std::vector<QuadInt>> pow((size_t)(2 * n - 1),
                                          std::vector<QuadInt>((size_t)n, QuadInt{0, 0}));
    pow[0][0] = {1, 0};
    for (int m = 1; m <= 2 * n - 2; ++m) {
        std::vector<QuadInt> cur((size_t)n + 1, QuadInt{0, 0});
        for (int l = 0; l < n; ++l) cur[(size_t)l + 1] = pow[(size_t)m - 1][(size_t)l];
        QuadInt top = cur[(size_t)n];
        for (int l = 0; l < n; ++l)
            cur[(size_t)l] = qsub(cur[(size_t)l], qmul(k, top, ext.min_poly()[(size_t)l]));
        for (int l = 0; l < n; ++l) pow[(size_t)m][(size_t)l] = cur[(size_t)l];
    }

    QuadInt omega_sq{-k.omega_norm(), k.omega_trace()};  // omega^2 = t*omega - nw
    seed.table.assign((size_t)seed.N,
                      std::vector<std::vector<i64>>(
                          (size_t)seed.N, std::vector<i64>((size_t)seed.N, 0)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < seed.dk; ++i)
            for (int j2 = 0; j2 < n; ++j2)
                for (int i2 = 0; i2 < seed.dk; ++i2) {
                    int s = j * seed.dk + i, t = j2 * seed.dk + i2;
                    int omega_pow = i + i2;
                    for (int l = 0; l < n; ++l) {
                        QuadInt c = pow[(size_t)(j + j2)][(size_t)l];
                        if (omega_pow == 1) c = qmul(k, c, QuadInt{0, 1});
                        if (omega_pow == 2) c = qmul(k, c, omega_sq);
                        seed.table[(size_t)s][(size_t)t][(size_t)(l * seed.dk)] = c.a;
                        if (seed.dk == 2)
                            seed.table[(size_t)s][(size_t)t][(size_t)(l * seed.dk + 1)] = c.b;
                    }
                }
    return seed;
}

// Product of two elements given in seed coordinates.
std::vector<i64> mulvec(const SeedOrder& seed, const std::vector<i64>& x,
                        const std::vector<i64>& y) {
    std::vector<i128> acc((size_t)seed.N, 0);
    for (int s = 0; s < seed.N; ++s) {
        if (x[(size_t)s] == 0) continue;
        for (int t = 0; t < seed.N; ++t) {
            if (y[(size_t)t] == 0) continue;
            i128 m = (i128)x[(size_t)s] * y[(size_t)t];
            for (int u = 0; u < seed.N; ++u)
                acc[(size_t)u] += m * seed.table[(size_t)s][(size_t)t][(size_t)u];
        }
    }
    std::vector<i64> out((size_t)seed.N);
    for (int u = 0; u < seed.N; ++u) {
        check_fits(acc[(size_t)u]);
        out[(size_t)u] = (i64)acc[(size_t)u];
    }
    return out;
}

// An order between o_k[theta] and (1/den) o_k[theta]: rows/den in seed
// coordinates, rows kept in Hermite form (square, upper triangular).
struct Order {
    std::vector<std::vector<i64>> rows;
    i64 den = 1;
};

// Solves c * M = q for an upper-triangular full-rank M; exact division
// enforced (the callers only solve systems with known integral solutions).
std::vector<i64> solve_rowspace(const std::vector<std::vector<i64>>& M,
                                const std::vector<i64>& q) {
    int N = (int)M.size();
    std::vector<i64> c((size_t)N, 0);
    for (int col = 0; col < N; ++col) {
        i128 acc = q[(size_t)col];
        for (int i = 0; i < col; ++i) acc -= (i128)c[(size_t)i] * M[(size_t)i][(size_t)col];
        i64 piv = M[(size_t)col][(size_t)col];
        if (piv == 0 || acc % piv != 0)
            throw std::logic_error("element does not lie in the order lattice");
        acc /= piv;
        check_fits(acc);
        c[(size_t)col] = (i64)acc;
    }
    return c;
}

std::vector<i64> exact_div(std::vector<i64> v, i64 d) {
    for (auto& x : v) {
        if (x % d != 0) throw std::logic_error("ring product escaped the order lattice");
        x /= d;
    }
    return v;
}

// Nullspace basis of an m x N matrix over F_p (vectors v with A v = 0).
std::vector<std::vector<i64>> nullspace_mod_p(std::vector<std::vector<i64>> A, int N, i64 p) {
    int m = (int)A.size();
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < N && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (A[(size_t)i][(size_t)col] % p != 0) {
                piv = i;
                break;
            }
        if (piv == -1) continue;
        std::swap(A[(size_t)r], A[(size_t)piv]);
        i64 inv = mod_inv(mod_floor(A[(size_t)r][(size_t)col], p), p);
        for (int j = 0; j < N; ++j)
            A[(size_t)r][(size_t)j] = mod_floor(A[(size_t)r][(size_t)j] * inv % p, p);
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            i64 f = mod_floor(A[(size_t)i][(size_t)col], p);
            if (f == 0) continue;
            for (int j = 0; j < N; ++j)
                A[(size_t)i][(size_t)j] =
                    mod_floor(A[(size_t)i][(size_t)j] - f * A[(size_t)r][(size_t)j] % p, p);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot((size_t)N, false);
    for (int c : pivot_col) is_pivot[(size_t)c] = true;
    std::vector<std::vector<i64>> basis;
    for (int free = 0; free < N; ++free) {
        if (is_pivot[(size_t)free]) continue;
        std::vector<i64> v((size_t)N, 0);
        v[(size_t)free] = 1;
        for (int i = 0; i < (int)pivot_col.size(); ++i)
            v[(size_t)pivot_col[(size_t)i]] = mod_floor(-A[(size_t)i][(size_t)free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Structure constants of the order's own basis (integral since it is a ring).
std::vector<std::vector<std::vector<i64>>> structure_constants(const SeedOrder& seed,
                                                               const Order& O) {
    int N = seed.N;
    std::vector<std::vector<std::vector<i64>>> c(
        (size_t)N, std::vector<std::vector<i64>>((size_t)N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j) {
            auto q = exact_div(mulvec(seed, O.rows[(size_t)i], O.rows[(size_t)j]), O.den);
            c[(size_t)i][(size_t)j] = solve_rowspace(O.rows, q);
            c[(size_t)j][(size_t)i] = c[(size_t)i][(size_t)j];
        }
    return c;
}

// One round of radical + multiplier ring at p; returns true if the order grew.
bool saturate_step(const SeedOrder& seed, Order& O, i64 p) {
    int N = seed.N;
    auto c = structure_constants(seed, O);
    auto mul_mod = [&](const std::vector<i64>& x, const std::vector<i64>& y) {
        std::vector<i64> z((size_t)N, 0);
        for (int s = 0; s < N; ++s) {
            if (x[(size_t)s] == 0) continue;
            for (int t = 0; t < N; ++t) {
                if (y[(size_t)t] == 0) continue;
                i64 m = x[(size_t)s] * y[(size_t)t] % p;
                if (m == 0) continue;
                for (int u = 0; u < N; ++u) {
                    i64 cv = mod_floor(c[(size_t)s][(size_t)t][(size_t)u] % p, p);
                    z[(size_t)u] = mod_floor(z[(size_t)u] + m * cv % p, p);
                }
            }
        }
        return z;
    };

    // Frobenius matrix x -> x^p on O/pO, iterated until p^m >= N; its kernel
    // is the radical (the algebra is commutative).
    std::vector<std::vector<i64>> frob((size_t)N, std::vector<i64>((size_t)N, 0));
    for (int i = 0; i < N; ++i) {
        std::vector<i64> base((size_t)N, 0), acc((size_t)N, 0);
        base[(size_t)i] = 1;
        // acc = base^p by square-and-multiply
        acc = base;
        i64 e = p - 1;
        std::vector<i64> sq = base;
        while (e > 0) {
            if (e & 1) acc = mul_mod(acc, sq);
            sq = mul_mod(sq, sq);
            e >>= 1;
        }
        for (int u = 0; u < N; ++u) frob[(size_t)u][(size_t)i] = acc[(size_t)u];
    }
    i64 q = p;
    std::vector<std::vector<i64>> fm = frob;
    while (q < N) {
        std::vector<std::vector<i64>> next((size_t)N, std::vector<i64>((size_t)N, 0));
        for (int i = 0; i < N; ++i)
            for (int l = 0; l < N; ++l) {
                if (frob[(size_t)i][(size_t)l] == 0) continue;
                for (int j = 0; j < N; ++j)
                    next[(size_t)i][(size_t)j] =
                        mod_floor(next[(size_t)i][(size_t)j] +
                                      frob[(size_t)i][(size_t)l] * fm[(size_t)l][(size_t)j] % p,
                                  p);
            }
        fm = std::move(next);
        q *= p;
    }
    auto radical = nullspace_mod_p(fm, N, p);

    // radical ideal I as a sublattice (same denominator as O)
    std::vector<std::vector<i64>> irows;
    for (const auto& row : O.rows) {
        std::vector<i64> r = row;
        for (auto& x : r) x *= p;
        irows.push_back(std::move(r));
    }
    for (const auto& v : radical) {
        std::vector<i128> acc((size_t)N, 0);
        for (int i = 0; i < N; ++i)
            for (int u = 0; u < N; ++u) acc[(size_t)u] += (i128)v[(size_t)i] * O.rows[(size_t)i][(size_t)u];
        std::vector<i64> r((size_t)N);
        for (int u = 0; u < N; ++u) {
            check_fits(acc[(size_t)u]);
            r[(size_t)u] = (i64)acc[(size_t)u];
        }
        irows.push_back(std::move(r));
    }
    if (hnf_integer(irows) != N) throw std::logic_error("radical lattice lost full rank");
    irows.resize((size_t)N);

    // multiplier ring: x in O/pO with x*I inside p*I
    std::vector<std::vector<i64>> system;
    for (int i = 0; i < N; ++i) {
        // action of basis element i on I/pI, flattened column-wise
        std::vector<std::vector<i64>> alpha((size_t)N);
        for (int j = 0; j < N; ++j) {
            auto w = exact_div(mulvec(seed, O.rows[(size_t)i], irows[(size_t)j]), O.den);
            alpha[(size_t)j] = solve_rowspace(irows, w);
        }
        // equations indexed by (j, u); build incrementally into the system
        if (system.empty()) system.assign((size_t)(N * N), std::vector<i64>((size_t)N, 0));
        for (int j = 0; j < N; ++j)
            for (int u = 0; u < N; ++u)
                system[(size_t)(j * N + u)][(size_t)i] = mod_floor(alpha[(size_t)j][(size_t)u], p);
    }
    auto kernel = nullspace_mod_p(system, N, p);
    if (kernel.empty()) return false;

    std::vector<std::vector<i64>> rows;
    for (const auto& row : O.rows) {
        std::vector<i64> r = row;
        for (auto& x : r) x *= p;
        rows.push_back(std::move(r));
    }
    for (const auto& xi : kernel) {
        std::vector<i128> acc((size_t)N, 0);
        for (int i = 0; i < N; ++i)
            for (int u = 0; u < N; ++u) acc[(size_t)u] += (i128)xi[(size_t)i] * O.rows[(size_t)i][(size_t)u];
        std::vector<i64> r((size_t)N);
        for (int u = 0; u < N; ++u) {
            check_fits(acc[(size_t)u]);
            r[(size_t)u] = (i64)acc[(size_t)u];
        }
        rows.push_back(std::move(r));
    }
    if (hnf_integer(rows) != N) throw std::logic_error("order lattice lost full rank");
    rows.resize((size_t)N);
    i64 den = O.den * p;
    i64 g = den;
    for (const auto& row : rows)
        for (i64 x : row) g = gcd_i64(g, x < 0 ? -x : x);
    if (g > 1) {
        for (auto& row : rows)
            for (auto& x : row) x /= g;
        den /= g;
    }
    bool grew = den != O.den || rows != O.rows;
    O.rows = std::move(rows);
    O.den = den;
    return grew;
}

Order saturate_at(const SeedOrder& seed, i64 p) {
    Order O;
    O.rows.assign((size_t)seed.N, std::vector<i64>((size_t)seed.N, 0));
    for (int i = 0; i < seed.N; ++i) O.rows[(size_t)i][(size_t)i] = 1;
    for (int iter = 0; iter < 96; ++iter)
        if (!saturate_step(seed, O, p)) return O;
    throw std::logic_error("order saturation did not terminate");
}

int valuation_i64(i64 x, i64 p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// v_P of the n-th exterior power of the order (fractional: can be negative),
// read from the n x n minors of the basis over the theta-power k-basis.
int exterior_valuation(const SeedOrder& seed, const Order& O, const PrimeIdeal& prime) {
    const BaseField& k = seed.k;
    int n = seed.n, N = seed.N;
    // overflow guard for the minor determinants
    i128 bound = 1;
    for (int i = 0; i < n; ++i) bound *= (i128)O.den * 4 * (k.omega_norm() + 4);
    check_fits(bound);

    int denom_val = n * prime.e * valuation_i64(O.den, prime.p);
    int best = 1 << 20;
    std::vector<int> pick((size_t)n);
    for (int i = 0; i < n; ++i) pick[(size_t)i] = i;
    while (true) {
        std::vector<std::vector<QuadInt>> M((size_t)n, std::vector<QuadInt>((size_t)n));
        for (int r = 0; r < n; ++r)
            for (int j = 0; j < n; ++j) {
                const auto& row = O.rows[(size_t)pick[(size_t)r]];
                M[(size_t)r][(size_t)j] = {row[(size_t)(j * seed.dk)],
                                           seed.dk == 2 ? row[(size_t)(j * seed.dk + 1)] : 0};
            }
        QuadInt det = qdet(k, M);
        if (!(det == QuadInt{0, 0})) {
            int v = ideal_valuation(k, prime, det, 192) - denom_val;
            best = std::min(best, v);
        }
        // next n-combination of {0..N-1}
        int i = n - 1;
        while (i >= 0 && pick[(size_t)i] == N - n + i) --i;
        if (i < 0) break;
        ++pick[(size_t)i];
        for (int j = i + 1; j < n; ++j) pick[(size_t)j] = pick[(size_t)j - 1] + 1;
    }
    if (best == (1 << 20)) throw std::logic_error("order basis has rank below n over k");
    return best;
}

}  // namespace

std::vector<IndexDatum> maximal_order_index(const RelativeExtension& ext, std::uint64_t seed_val) {
    const BaseField& k = ext.base();
    auto bad = maximality_check(ext, seed_val);
    std::vector<i64> ps;
    for (const auto& prime : bad)
        if (std::find(ps.begin(), ps.end(), prime.p) == ps.end()) ps.push_back(prime.p);
    std::sort(ps.begin(), ps.end());

    SeedOrder seed = build_seed(ext);
    std::vector<IndexDatum> out;
    for (i64 p : ps) {
        Order O = saturate_at(seed, p);
        i64 det = 1;
        int det_val = 0;
        for (int i = 0; i < seed.N; ++i) {
            det = O.rows[(size_t)i][(size_t)i];
            det_val += valuation_i64(det, p);
        }
        int index_val_z = seed.N * valuation_i64(O.den, p) - det_val;  // v_p([O : o_k[theta]])
        int check = 0;
        for (const auto& prime : prime_ideals_above(k, p)) {
            int a = -exterior_valuation(seed, O, prime);
            if (a < 0) throw std::logic_error("exterior power of an overorder below the base");
            check += a * prime.f;
            if (a > 0) out.push_back({prime, a});
        }
        if (check != index_val_z)
            throw std::logic_error("per-prime index valuations do not add up to the Z-index");
    }
    return out;
}

IdealClass ring_of_integers_class(const RelativeExtension& ext, const ClassGroup& g,
                                  std::uint64_t seed) {
    int cls = g.identity();
    if (!g.field().is_rational())
        for (const auto& [prime, val] : maximal_order_index(ext, seed))
            cls = g.compose(cls, g.power(g.index_of(ideal_class(g.field(), g, prime)), -val));
    return g.element(cls);
}

}  // namespace selcsa
