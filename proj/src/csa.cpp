#include "selcsa/csa.hpp"

#include <algorithm>

#include "selcsa/errors.hpp"

namespace selcsa {

bool AlgebraSpec::is_matrix_algebra() const {
    return finite_invariants.empty() && real_invariant.is_zero();
}

void validate_algebra(const AlgebraSpec& spec) {
    if (spec.n < 3) throw ValidationError("algebra degree must be at least 3");
    Frac sum = spec.real_invariant;
    for (const auto& [prime, inv] : spec.finite_invariants) {
        if (spec.field.is_rational() != (prime.type == SplitType::Rational))
            throw ValidationError("invariant prime " + prime.str() + " is not a prime of " +
                                  spec.field.str());
        if (inv.num < 0 || inv.num >= inv.den)
            throw ValidationError("invariant at " + prime.str() + " must lie in [0, 1)");
        if (spec.n % inv.den)
            throw ValidationError("invariant denominator " + std::to_string(inv.den) +
                                  " at " + prime.str() + " does not divide the degree");
        sum = sum + inv;
    }
    for (size_t i = 0; i < spec.finite_invariants.size(); ++i)
        for (size_t j = i + 1; j < spec.finite_invariants.size(); ++j)
            if (spec.finite_invariants[i].first == spec.finite_invariants[j].first)
                throw ValidationError("duplicate invariant prime " +
                                      spec.finite_invariants[i].first.str());
    if (!spec.real_invariant.is_zero()) {
        if (!spec.field.is_rational())
            throw ValidationError("no real place over " + spec.field.str());
        if (spec.real_invariant != Frac(1, 2))
            throw ValidationError("real invariant must be 0 or 1/2");
        if (spec.n % 2)
            throw ValidationError("real invariant 1/2 requires even degree");
    }
    if (!sum.is_integer())
        throw ValidationError("invariants violate reciprocity: sum = " + sum.str());
}

LocalIndexDatum local_index(const AlgebraSpec& spec, const PrimeIdeal& prime) {
    int d = 1;
    for (const auto& [q, inv] : spec.finite_invariants)
        if (q == prime) d = (int)inv.den;
    return LocalIndexDatum{prime, d, spec.n / d};
}

bool local_embeddable(const AlgebraSpec& spec, const RelativeExtension& ext,
                      const PrimeIdeal& prime, std::uint64_t seed) {
    int d = local_index(spec, prime).d_v;
    if (d == 1) return true;
    auto datum = splitting_type(ext, prime, seed);
    if (!datum.certified)
        throw UndeterminedPrimeError("splitting at " + prime.str() +
                                     " is uncertified; local embeddability undetermined");
    for (auto& [e, f] : datum.factors)
        if ((e * f) % d) return false;
    return true;
}

bool global_embeddable(const AlgebraSpec& spec, const RelativeExtension& ext,
                       std::uint64_t seed) {
    validate_algebra(spec);
    if (ext.base() != spec.field) throw ValidationError("extension and algebra base fields differ");
    for (const auto& [prime, inv] : spec.finite_invariants) {
        (void)inv;
        if (!local_embeddable(spec, ext, prime, seed)) return false;
    }
    if (spec.real_invariant == Frac(1, 2)) {
        // D_R = H: real completions of K (degree 1) cannot receive it
        if (count_real_roots(ext.min_poly()) > 0) return false;
    }
    return true;
}

namespace {

std::vector<Frac> sturm_rem(const std::vector<Frac>& f, const std::vector<Frac>& g) {
    std::vector<Frac> r = f;
    while (r.size() >= g.size() && !(r.size() == 1 && r[0].is_zero())) {
        if (r.back().is_zero()) {
            r.pop_back();
            continue;
        }
        Frac q = r.back() / g.back();
        size_t shift = r.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) r[shift + i] = r[shift + i] - q * g[i];
        r.pop_back();
    }
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
}

int sign_at_inf(const std::vector<Frac>& f, int dir) {
    if (f.empty() || (f.size() == 1 && f[0].is_zero())) return 0;
    i64 s = f.back().num > 0 ? 1 : -1;
    if (dir < 0 && (f.size() - 1) % 2) s = -s;
    return (int)s;
}

}  // namespace

int count_real_roots(const std::vector<QuadInt>& poly) {
    std::vector<Frac> f;
    for (const auto& c : poly) {
        if (c.b != 0) throw ValidationError("real-root count requires rational coefficients");
        f.emplace_back(c.a);
    }
    while (f.size() > 1 && f.back().is_zero()) f.pop_back();
    if (f.size() <= 1) return 0;
    std::vector<Frac> df(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * Frac((i64)i);

    std::vector<std::vector<Frac>> chain = {f, df};
    while (chain.back().size() > 1) {
        std::vector<Frac> r = sturm_rem(chain[chain.size() - 2], chain.back());
        if (r.size() == 1 && r[0].is_zero()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](int dir) {
        int count = 0, prev = 0;
        for (const auto& g : chain) {
            int s = sign_at_inf(g, dir);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(-1) - variations(+1);
}

}  // namespace selcsa
