#include "selcsa/steinitz.hpp"

#include <algorithm>
#include <numeric>

#include "selcsa/errors.hpp"
#include "selcsa/maximal_order.hpp"

namespace selcsa {

KElem kadd(const KElem& x, const KElem& y) { return {x.a + y.a, x.b + y.b}; }
KElem ksub(const KElem& x, const KElem& y) { return {x.a - y.a, x.b - y.b}; }

KElem kmul(const BaseField& k, const KElem& x, const KElem& y) {
    Frac t((i64)k.omega_trace()), nw((i64)k.omega_norm());
    return {x.a * y.a - nw * (x.b * y.b), x.a * y.b + x.b * y.a + t * (x.b * y.b)};
}

PseudoLattice free_lattice(const BaseField& k, int n) {
    (void)k;
    PseudoLattice lat;
    lat.coefficient_ideals.assign((size_t)n, FracIdeal{ZIdeal{1, 1, 0}, 1});
    lat.basis.assign((size_t)n, std::vector<KElem>((size_t)n, KElem{Frac(0), Frac(0)}));
    for (int i = 0; i < n; ++i) lat.basis[(size_t)i][(size_t)i] = {Frac(1), Frac(0)};
    return lat;
}

namespace {

bool kis_zero(const KElem& x) { return x.a.is_zero() && x.b.is_zero(); }

KElem kdet(const BaseField& k, const std::vector<std::vector<KElem>>& M) {
    int n = (int)M.size();
    std::vector<KElem> dp((size_t)1 << n, KElem{Frac(0), Frac(0)});
    dp[0] = {Frac(1), Frac(0)};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int row = __builtin_popcount(mask);
        if (row >= n || kis_zero(dp[mask])) continue;
        int parity = 0;
        for (int c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            KElem term = kmul(k, dp[mask], M[(size_t)row][(size_t)c]);
            if (parity & 1) term = ksub(KElem{Frac(0), Frac(0)}, term);
            dp[mask | (1u << c)] = kadd(dp[mask | (1u << c)], term);
            ++parity;
        }
    }
    return dp[((size_t)1 << n) - 1];
}

void validate_lattice(const BaseField& k, const PseudoLattice& lat) {
    int n = lat.rank();
    if (n < 1 || (int)lat.basis.size() != n)
        throw ValidationError("pseudo-lattice basis must be square of the coefficient rank");
    for (const auto& row : lat.basis)
        if ((int)row.size() != n) throw ValidationError("ragged pseudo-lattice basis");
    for (const auto& ideal : lat.coefficient_ideals)
        if (ideal.den < 1) throw ValidationError("fractional ideal denominator must be positive");
    if (kis_zero(kdet(k, lat.basis))) throw ValidationError("singular pseudo-lattice basis");
}

}  // namespace

std::vector<std::vector<Frac>> canonical_lattice_basis(const BaseField& k,
                                                       const PseudoLattice& lat) {
    validate_lattice(k, lat);
    int n = lat.rank();
    int dim = n * k.degree();

    // Z-generators: each o_k-generator of each coefficient ideal times the
    // basis row, plus its omega multiple over a quadratic base.
    std::vector<std::vector<Frac>> gens;
    for (int i = 0; i < n; ++i) {
        const FracIdeal& ideal = lat.coefficient_ideals[(size_t)i];
        std::vector<QuadInt> igens = {QuadInt{ideal.num.c * ideal.num.a, 0},
                                      QuadInt{ideal.num.c * ideal.num.b, ideal.num.c}};
        if (!k.is_rational()) {
            size_t count = igens.size();
            for (size_t t = 0; t < count; ++t) igens.push_back(qmul(k, igens[t], QuadInt{0, 1}));
        }
        Frac den(1, ideal.den);
        for (const auto& alpha : igens) {
            KElem a{Frac(alpha.a) * den, Frac(alpha.b) * den};
            std::vector<Frac> row;
            row.reserve((size_t)dim);
            for (int j = 0; j < n; ++j) {
                KElem x = kmul(k, a, lat.basis[(size_t)i][(size_t)j]);
                row.push_back(x.a);
                if (!k.is_rational()) row.push_back(x.b);
            }
            gens.push_back(std::move(row));
        }
    }

    i64 L = 1;
    for (const auto& row : gens)
        for (const auto& x : row) L = std::lcm(L, x.den);
    std::vector<std::vector<i64>> rows;
    rows.reserve(gens.size());
    for (const auto& row : gens) {
        std::vector<i64> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.num * (L / x.den));
        rows.push_back(std::move(r));
    }
    if (hnf_integer(rows) != dim)
        throw ValidationError("pseudo-lattice does not have full rank");

    std::vector<std::vector<Frac>> out((size_t)dim, std::vector<Frac>((size_t)dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[(size_t)i][(size_t)j] = Frac(rows[(size_t)i][(size_t)j], L);
    return out;
}

bool lattice_equal(const BaseField& k, const PseudoLattice& x, const PseudoLattice& y) {
    if (x.rank() != y.rank()) return false;
    return canonical_lattice_basis(k, x) == canonical_lattice_basis(k, y);
}

IdealClass ideal_class_of(const ClassGroup& g, const ZIdeal& I) {
    const BaseField& k = g.field();
    if (k.is_rational()) return g.element(g.identity());
    i64 t = k.omega_trace(), nw = k.omega_norm();
    i64 num = I.b * I.b + t * I.b + nw;
    if (num % I.a) throw ValidationError("not an o_k-ideal: " + I.str());
    return IdealClass{reduce_form(QuadForm{I.a, 2 * I.b + t, num / I.a})};
}

SteinitzClass steinitz_class(const ClassGroup& g, const PseudoLattice& lat) {
    validate_lattice(g.field(), lat);
    ZIdeal prod{1, 1, 0};
    for (const auto& ideal : lat.coefficient_ideals)
        prod = ideal_mul(g.field(), prod, ideal.num);  // denominators are principal
    return SteinitzClass{ideal_class_of(g, prod)};
}

std::vector<IdealClass> maximal_order_class_set(const ClassGroup& g, int n) {
    if (n < 3) throw ValidationError("degree must be at least 3");
    Subgroup power = Subgroup::power_subgroup(g, n);
    std::vector<IdealClass> out;
    for (int rep : power.coset_representatives()) out.push_back(g.element(rep));
    return out;
}

std::vector<IdealClass> embeddable_steinitz_set(const RelativeExtension& ext, const ClassGroup& g,
                                                int n, i64 bound, std::uint64_t seed) {
    if (ext.degree() != n) throw ValidationError("lattice rank must match the extension degree");
    // Rank-one o_K-lattices have module class st(o_K) * class(N_{K/k}(B))
    // over o_k, so the reachable Steinitz cosets are the norm-subgroup
    // translate of the ring of integers' own class.
    int anchor = g.index_of(ring_of_integers_class(ext, g, seed));
    NormSubgroup norm = norm_class_subgroup(ext, g, bound, seed);
    Subgroup power = Subgroup::power_subgroup(g, n);
    std::vector<int> reps;
    for (int m : norm.subgroup.members()) reps.push_back(power.coset_of(g.compose(anchor, m)));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::vector<IdealClass> out;
    for (int rep : reps) out.push_back(g.element(rep));
    return out;
}

CrossCheckResult cross_check(const OrderGenusSpec& spec, const ClassGroup& g,
                             const SelectivityReport& report,
                             const std::vector<IdealClass>& oracle_set) {
    if (!spec.algebra.is_matrix_algebra())
        throw OracleUnavailableError("oracle not applicable: the algebra is ramified");
    for (const auto& [prime, type] : spec.local_types)
        if (type.kind != LocalTypeKind::MaximalSplit)
            throw OracleUnavailableError("oracle not applicable: non-maximal local type at " +
                                         prime.str());

    if ((i64)oracle_set.size() != report.embeddable_class_count) return {false, ""};
    auto sorted = [](std::vector<IdealClass> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<IdealClass> engine = sorted(report.embeddable_classes);
    if (sorted(oracle_set) == engine) return {true, "direct"};

    Subgroup power = Subgroup::power_subgroup(g, spec.algebra.n);
    std::vector<IdealClass> inverted;
    for (const auto& c : oracle_set)
        inverted.push_back(g.element(power.coset_of(g.inverse(g.index_of(c)))));
    if (sorted(std::move(inverted)) == engine) return {true, "inverse"};
    return {false, ""};
}

}  // namespace selcsa
