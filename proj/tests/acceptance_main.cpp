// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "../tests/oracle_ideals.hpp"
#include "selcsa/driver.hpp"
#include "selcsa/errors.hpp"

using namespace selcsa;
using nlohmann::json;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report_line(int idx, const std::string& name, bool ok, double elapsed,
                 const std::string& detail = "") {
    std::printf("[%d/8] %-38s %s (%.2f s)%s%s\n", idx, name.c_str(), ok ? "pass" : "FAIL",
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<QuadInt> rational_poly(std::initializer_list<i64> coeffs) {
    std::vector<QuadInt> out;
    for (i64 c : coeffs) out.push_back({c, 0});
    return out;
}

const std::vector<QuadInt> kCubic = rational_poly({-1, -1, 0, 1});        // x^3 - x - 1
const std::vector<QuadInt> kQuartic = rational_poly({9, 0, -2, 0, 1});    // x^4 - 2x^2 + 9
const std::vector<QuadInt> kQuartic2 = rational_poly({-1, -1, 0, 0, 1});  // x^4 - x - 1

struct CorpusCase {
    const char* label;
    i64 D;  // 0 = rationals
    std::vector<QuadInt> poly;
    int n;
};

const std::vector<CorpusCase> kCorpus = {
    {"x^3-x-1 over Q(sqrt(-23))", -23, kCubic, 3},
    {"x^4-2x^2+9 over Q(sqrt(-5))", -20, kQuartic, 4},
    {"x^3-x-1 over Q(sqrt(-5))", -20, kCubic, 3},
    {"x^3-x-1 over Q(sqrt(-31))", -31, kCubic, 3},
    {"x^3-x-1 over Q(sqrt(-47))", -47, kCubic, 3},
    {"x^4-x-1 over Q(sqrt(-5))", -20, kQuartic2, 4},
    {"x^3-x-1 over Q", 0, kCubic, 3},
    {"x^4-x-1 over Q", 0, kQuartic2, 4},
};

OrderGenusSpec matrix_maximal(const BaseField& k, int n) {
    OrderGenusSpec spec;
    spec.algebra.field = k;
    spec.algebra.n = n;
    return spec;
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        BaseField k = BaseField::imaginary_quadratic(-23);
        ClassGroup g = ClassGroup::compute(k);
        auto ext = RelativeExtension::create(k, kCubic);
        auto report = selectivity_report(matrix_maximal(k, 3), g, ext, 1000);
        ok = report.genus_class_count == 3 && report.selectivity_degree == 3 &&
             report.embeddable_class_count == 1 && report.ratio == Frac(1, 3) &&
             report.exactness == Exactness::Exact;
        if (!ok)
            detail = "genus=" + std::to_string(report.genus_class_count) +
                     " sel=" + std::to_string(report.selectivity_degree) +
                     " emb=" + std::to_string(report.embeddable_class_count);
    } catch (const Error& e) {
        detail = e.what();
    }
    double t = seconds_since(start);
    if (t >= 5.0) {
        ok = false;
        detail += " over time budget";
    }
    report_line(1, "golden cubic, matrix algebra", ok, t, detail);
}

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        BaseField k = BaseField::imaginary_quadratic(-23);
        ClassGroup g = ClassGroup::compute(k);
        auto ext = RelativeExtension::create(k, kCubic);
        auto above2 = prime_ideals_above(k, 2);
        OrderGenusSpec spec = matrix_maximal(k, 3);
        spec.algebra.finite_invariants = {{above2[0], Frac(1, 3)}, {above2[1], Frac(2, 3)}};
        auto report = selectivity_report(spec, g, ext, 1000);
        ok = report.genus_class_count == 1 && report.embeddable_class_count == 1 &&
             report.ratio == Frac(1) && report.globally_embeddable;
        if (!ok) detail = "genus=" + std::to_string(report.genus_class_count);
    } catch (const Error& e) {
        detail = e.what();
    }
    double t = seconds_since(start);
    if (t >= 5.0) {
        ok = false;
        detail += " over time budget";
    }
    report_line(2, "golden cubic, ramified algebra", ok, t, detail);
}

void criterion3() {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        BaseField k = BaseField::imaginary_quadratic(-20);
        ClassGroup g = ClassGroup::compute(k);
        auto ext = RelativeExtension::create(k, kQuartic);
        auto report = selectivity_report(matrix_maximal(k, 4), g, ext, 1000);
        ok = report.genus_class_count == 2 && report.ratio == Frac(1, 2) &&
             report.exactness == Exactness::Exact;
        if (!ok)
            detail = "genus=" + std::to_string(report.genus_class_count) +
                     " ratio=" + report.ratio.str();
    } catch (const Error& e) {
        detail = e.what();
    }
    double t = seconds_since(start);
    if (t >= 10.0) {
        ok = false;
        detail += " over time budget";
    }
    report_line(3, "quartic over Q(sqrt(-5))", ok, t, detail);
}

void criterion4() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (i64 D : {-3, -4, -7, -8, -11, -15, -20, -23, -24, -31, -47}) {
        BaseField k = BaseField::imaginary_quadratic(D);
        int computed = ClassGroup::compute(k).order();
        int brute = testing::brute_force_class_number(k);
        if (computed != brute) {
            ok = false;
            detail += "D=" + std::to_string(D) + ": " + std::to_string(computed) +
                      " vs " + std::to_string(brute) + "; ";
        }
    }
    report_line(4, "class numbers vs ideal enumeration", ok, seconds_since(start), detail);
}

void criterion5() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& c : kCorpus) {
        BaseField k = BaseField::from_discriminant(c.D);
        ClassGroup g = ClassGroup::compute(k);
        auto ext = RelativeExtension::create(k, c.poly);
        OrderGenusSpec spec = matrix_maximal(k, c.n);
        try {
            auto report = selectivity_report(spec, g, ext, 1000);
            auto oracle = embeddable_steinitz_set(ext, g, c.n, 1000);
            auto result = cross_check(spec, g, report, oracle);
            if (!result.match) {
                ok = false;
                detail += std::string(c.label) + ": mismatch; ";
            }
        } catch (const Error& e) {
            ok = false;
            detail += std::string(c.label) + ": " + e.what() + "; ";
        }
    }
    report_line(5, "lattice oracle cross-check", ok, seconds_since(start), detail);
}

// One reusable bundle per corpus case for the randomized suite.
struct CaseData {
    BaseField k = BaseField::rationals();
    ClassGroup g = ClassGroup::compute(BaseField::rationals());
    int n = 3;
    std::vector<QuadInt> poly;
    NormSubgroup norm{Subgroup::trivial(g), 0, true, {}};
    std::vector<PrimeIdeal> certified;  // certified primes, small norm first
    std::vector<PrimeIdeal> inert_in_top;  // certified with a single factor e*f = n
};

void criterion6() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    int total = 0;
    std::mt19937_64 rng(2026);
    try {
        // deque: stable addresses, the norm subgroup points at its own group
        std::deque<CaseData> cases;
        for (const auto& c : kCorpus) {
            cases.emplace_back();
            CaseData& data = cases.back();
            data.k = BaseField::from_discriminant(c.D);
            data.g = ClassGroup::compute(data.k);
            data.n = c.n;
            data.poly = c.poly;
            auto ext = RelativeExtension::create(data.k, c.poly);
            data.norm = norm_class_subgroup(ext, data.g, 300);
            for (i64 p : primes_up_to(60))
                for (const auto& prime : prime_ideals_above(data.k, p)) {
                    auto datum = splitting_type(ext, prime);
                    if (!datum.certified) continue;
                    data.certified.push_back(prime);
                    if (datum.factors.size() == 1 &&
                        datum.factors[0].first * datum.factors[0].second == c.n)
                        data.inert_in_top.push_back(prime);
                }
        }

        auto divisors_of = [](int n) {
            std::vector<int> out;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) out.push_back(d);
            return out;
        };

        for (int round = 0; round < 30 && ok; ++round) {
            for (auto& data : cases) {
                if (!ok) break;
                auto ext = RelativeExtension::create(data.k, data.poly);
                OrderGenusSpec spec = matrix_maximal(data.k, data.n);

                int flavor = (int)(rng() % 3);
                if (flavor == 1 && data.certified.size() >= 2) {
                    // random balanced invariants at two distinct primes
                    auto divs = divisors_of(data.n);
                    int d = divs[1 + rng() % (divs.size() - 1)];
                    int a = 1 + (int)(rng() % (std::uint64_t)(d - 1 ? d - 1 : 1));
                    if (a >= d) a = d - 1 ? d - 1 : 1;
                    size_t i = rng() % data.certified.size();
                    size_t j = rng() % data.certified.size();
                    if (i == j) j = (j + 1) % data.certified.size();
                    if (d > 1 && a > 0 && a < d)
                        spec.algebra.finite_invariants = {{data.certified[i], Frac(a, d)},
                                                          {data.certified[j], Frac(d - a, d)}};
                } else if (flavor == 2 && !data.inert_in_top.empty() &&
                           data.certified.size() >= 2) {
                    // a full division prime, sometimes with a division-type order
                    const PrimeIdeal& p = data.inert_in_top[rng() % data.inert_in_top.size()];
                    PrimeIdeal q = data.certified[rng() % data.certified.size()];
                    if (q == p) q = data.certified[0] == p ? data.certified[1]
                                                           : data.certified[0];
                    spec.algebra.finite_invariants = {{p, Frac(1, data.n)},
                                                      {q, Frac(data.n - 1, data.n)}};
                    if (rng() % 2)
                        spec.local_types.push_back(
                            {p, LocalType{LocalTypeKind::MaximalDivision, 1}});
                }
                if (rng() % 3 == 0 && !data.certified.empty()) {
                    // a custom local type at a fresh prime
                    PrimeIdeal extra = data.certified[rng() % data.certified.size()];
                    bool taken = false;
                    for (const auto& [p, t] : spec.local_types) {
                        (void)t;
                        if (p == extra) taken = true;
                    }
                    auto divs = divisors_of(data.n);
                    if (!taken)
                        spec.local_types.push_back(
                            {extra, LocalType{LocalTypeKind::Custom,
                                              divs[rng() % divs.size()]}});
                }
                validate_genus(spec);
                ++total;

                auto stab = stabilizer_subgroup(spec, data.g);
                auto report = selectivity_report(spec, data.g, ext, data.norm);

                // (a) lower bound: emb >= genus / selectivity
                if (report.globally_embeddable &&
                    report.embeddable_class_count * report.selectivity_degree <
                        report.genus_class_count) {
                    ok = false;
                    detail = "lower bound violated";
                }
                // (b) a division-type prime forces every class
                bool division_type = false;
                for (const auto& [p, t] : spec.local_types) {
                    (void)p;
                    if (t.kind == LocalTypeKind::MaximalDivision) division_type = true;
                }
                if (division_type && report.globally_embeddable &&
                    report.embeddable_class_count != report.genus_class_count) {
                    ok = false;
                    detail = "division prime did not kill selectivity";
                }
                // (c) classes of fully ramified primes die in Cl/S
                for (const auto& [p, inv] : spec.algebra.finite_invariants) {
                    if ((int)inv.den != data.n) continue;
                    bool custom = false;
                    for (const auto& [q, t] : spec.local_types)
                        if (q == p && t.kind == LocalTypeKind::Custom) custom = true;
                    if (custom) continue;
                    int cls = data.g.index_of(ideal_class(data.k, data.g, p));
                    if (!stab.subgroup.contains(cls)) {
                        ok = false;
                        detail = "division prime class survives in Cl/S";
                    }
                }
            }
        }

        // (d) all-maximal matrix specs: S = Cl^n, checked per corpus case
        for (auto& data : cases) {
            OrderGenusSpec spec = matrix_maximal(data.k, data.n);
            ++total;
            auto stab = stabilizer_subgroup(spec, data.g);
            if (!(stab.subgroup == Subgroup::power_subgroup(data.g, data.n))) {
                ok = false;
                detail = "maximal stabilizer differs from n-th powers";
            }
        }
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    if (total < 200) {
        ok = false;
        detail += " only " + std::to_string(total) + " specs";
    }
    report_line(6, "randomized consistency suite", ok, seconds_since(start),
                ok ? std::to_string(total) + " specs" : detail);
}

void criterion7() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        for (const auto& c : kCorpus) {
            BaseField k = BaseField::from_discriminant(c.D);
            ClassGroup g = ClassGroup::compute(k);
            auto ext = RelativeExtension::create(k, c.poly);
            auto at_b = norm_class_subgroup(ext, g, 1000);
            auto at_2b = norm_class_subgroup(ext, g, 2000);
            if (!(at_b.subgroup == at_2b.subgroup) || !at_b.stabilized) {
                ok = false;
                detail += std::string(c.label) + "; ";
            }
        }
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    report_line(7, "norm subgroup stabilization", ok, seconds_since(start), detail);
}

void criterion8() {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        json config = json::parse(R"({
            "base_discriminant": -23,
            "degree": 3,
            "min_poly": [[-1,0],[-1,0],[0,0],[1,0]],
            "invariants": [],
            "order_local_types": [],
            "sampling_bound": 1000,
            "oracle": true,
            "seed": 11
        })");
        json a = run(parse_config(config));
        json b = run(parse_config(config));
        a.erase("generated_at");
        b.erase("generated_at");
        ok = a.dump() == b.dump();
        if (!ok) detail = "reports differ";
    } catch (const Error& e) {
        detail = e.what();
    }
    report_line(8, "report determinism", ok, seconds_since(start), detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    return g_failures;
}
