#include "selcsa/class_field.hpp"

#include <algorithm>

#include "selcsa/errors.hpp"

namespace selcsa {

namespace {

// The primes whose local descriptor can move the stabilizer: everything
// listed explicitly plus every algebra-ramified prime (its default
// MaximalSplit exponent m_v = n/d_v is smaller than n).
std::vector<std::pair<PrimeIdeal, LocalType>> effective_types(const OrderGenusSpec& spec) {
    std::vector<std::pair<PrimeIdeal, LocalType>> out = spec.local_types;
    for (const auto& [prime, inv] : spec.algebra.finite_invariants) {
        (void)inv;
        bool listed = false;
        for (const auto& [q, t] : out) {
            (void)t;
            if (q == prime) listed = true;
        }
        if (!listed) out.emplace_back(prime, LocalType{LocalTypeKind::MaximalSplit, 1});
    }
    return out;
}

i64 type_exponent(const OrderGenusSpec& spec, const PrimeIdeal& prime, const LocalType& type) {
    switch (type.kind) {
        case LocalTypeKind::MaximalSplit: return local_index(spec.algebra, prime).m_v;
        case LocalTypeKind::MaximalDivision: return 1;
        case LocalTypeKind::Custom: return type.custom_exponent;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

void validate_genus(const OrderGenusSpec& spec) {
    validate_algebra(spec.algebra);
    for (size_t i = 0; i < spec.local_types.size(); ++i)
        for (size_t j = i + 1; j < spec.local_types.size(); ++j)
            if (spec.local_types[i].first == spec.local_types[j].first)
                throw ValidationError("duplicate local type at " + spec.local_types[i].first.str());
    for (const auto& [prime, type] : spec.local_types) {
        if (spec.algebra.field.is_rational() != (prime.type == SplitType::Rational))
            throw ValidationError("local type prime " + prime.str() + " is not a prime of " +
                                  spec.algebra.field.str());
        if (type.kind == LocalTypeKind::Custom) {
            if (type.custom_exponent < 1 || spec.algebra.n % type.custom_exponent)
                throw ValidationError("custom exponent at " + prime.str() +
                                      " must divide the degree");
        }
        if (type.kind == LocalTypeKind::MaximalDivision &&
            local_index(spec.algebra, prime).d_v != spec.algebra.n)
            throw ValidationError("division-type order at " + prime.str() +
                                  " requires the algebra to be division there");
    }
}

StabilizerSubgroup stabilizer_subgroup(const OrderGenusSpec& spec, const ClassGroup& g) {
    validate_genus(spec);
    Subgroup s = Subgroup::power_subgroup(g, spec.algebra.n);
    std::vector<int> gens = s.members();
    std::vector<std::pair<PrimeIdeal, i64>> derivation;
    for (const auto& [prime, type] : effective_types(spec)) {
        i64 m = type_exponent(spec, prime, type);
        derivation.emplace_back(prime, m);
        int cls = g.index_of(ideal_class(g.field(), g, prime));
        gens.push_back(g.power(cls, m));
    }
    return StabilizerSubgroup{Subgroup::generated(g, gens), std::move(derivation)};
}

i64 genus_class_count(const OrderGenusSpec& spec, const ClassGroup& g) {
    return stabilizer_subgroup(spec, g).subgroup.index();
}

i64 selectivity_degree(const OrderGenusSpec& spec, const ClassGroup& g, const NormSubgroup& norm) {
    if (&norm.subgroup.ambient() != &g)
        throw ValidationError("norm subgroup lives in a different class group");
    return stabilizer_subgroup(spec, g).subgroup.join(norm.subgroup).index();
}

bool decide_class(const OrderGenusSpec& spec, const ClassGroup& g, const NormSubgroup& norm,
                  const IdealClass& c) {
    if (&norm.subgroup.ambient() != &g)
        throw ValidationError("norm subgroup lives in a different class group");
    int idx = g.index_of(c);  // throws for non-classes
    Subgroup ns = stabilizer_subgroup(spec, g).subgroup.join(norm.subgroup);
    return ns.contains(idx);
}

SelectivityReport selectivity_report(const OrderGenusSpec& spec, const ClassGroup& g,
                                     const RelativeExtension& ext, const NormSubgroup& norm,
                                     std::uint64_t seed) {
    validate_genus(spec);
    if (ext.base() != spec.algebra.field)
        throw ValidationError("extension and algebra base fields differ");
    if (ext.degree() != spec.algebra.n)
        throw ValidationError("extension degree does not match the algebra degree");
    if (&norm.subgroup.ambient() != &g)
        throw ValidationError("norm subgroup lives in a different class group");

    SelectivityReport report;
    auto stab = stabilizer_subgroup(spec, g);
    report.genus_class_count = stab.subgroup.index();
    report.class_field_degree = report.genus_class_count;

    // exact ratio only in the matrix/division dichotomy with maximal orders
    report.exactness = Exactness::Exact;
    for (const auto& [prime, type] : effective_types(spec)) {
        int d = local_index(spec.algebra, prime).d_v;
        if (type.kind == LocalTypeKind::Custom || (d != 1 && d != spec.algebra.n)) {
            report.exactness = Exactness::LowerBound;
            report.diagnostics.push_back("ratio is a lower bound: local type at " + prime.str() +
                                         " leaves the proven exactness regime");
        }
    }
    if (!norm.stabilized)
        report.diagnostics.push_back("norm subgroup had not stabilized at bound " +
                                     std::to_string(norm.sampling_bound));
    for (const auto& prime : norm.skipped)
        report.diagnostics.push_back("uncertified prime skipped during norm sampling: " +
                                     prime.str());

    report.globally_embeddable = global_embeddable(spec.algebra, ext, seed);
    if (!report.globally_embeddable) {
        report.selectivity_degree = stab.subgroup.join(norm.subgroup).index();
        report.embeddable_class_count = 0;
        report.ratio = Frac(0);
        report.diagnostics.push_back(
            "a local obstruction blocks the embedding everywhere; no order class admits it");
        return report;
    }

    Subgroup ns = stab.subgroup.join(norm.subgroup);
    report.selectivity_degree = ns.index();
    report.embeddable_class_count = report.genus_class_count / report.selectivity_degree;
    report.ratio = Frac(report.embeddable_class_count, report.genus_class_count);
    for (int rep : stab.subgroup.coset_representatives())
        if (ns.contains(rep)) report.embeddable_classes.push_back(g.element(rep));
    return report;
}

SelectivityReport selectivity_report(const OrderGenusSpec& spec, const ClassGroup& g,
                                     const RelativeExtension& ext, i64 bound,
                                     std::uint64_t seed) {
    return selectivity_report(spec, g, ext, norm_class_subgroup(ext, g, bound, seed), seed);
}

}  // namespace selcsa
