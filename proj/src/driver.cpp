#include "selcsa/driver.hpp"

#include <algorithm>
#include <chrono>

#include "selcsa/errors.hpp"

namespace selcsa {

using nlohmann::json;

PrimeIdeal resolve_prime(const BaseField& k, const PrimeSpec& spec) {
    auto primes = prime_ideals_above(k, spec.p);
    switch (spec.kind) {
        case PrimeSpec::Kind::Rational:
            if (!k.is_rational())
                throw ValidationError("prime " + std::to_string(spec.p) +
                                      " needs a selector (root/ramified/inert) over " + k.str());
            return primes[0];
        case PrimeSpec::Kind::Ramified:
        case PrimeSpec::Kind::Inert: {
            SplitType want =
                spec.kind == PrimeSpec::Kind::Ramified ? SplitType::Ramified : SplitType::Inert;
            for (const auto& prime : primes)
                if (prime.type == want) return prime;
            throw ValidationError("no such prime above " + std::to_string(spec.p) + " in " +
                                  k.str());
        }
        case PrimeSpec::Kind::Root:
            for (const auto& prime : primes)
                if (prime.type != SplitType::Inert &&
                    prime.root == mod_floor(spec.root, spec.p))
                    return prime;
            throw ValidationError("no prime above " + std::to_string(spec.p) + " with root " +
                                  std::to_string(spec.root));
    }
    throw std::logic_error("unreachable");
}

namespace {

json frac_to_json(const Frac& f) {
    return json{{"num", std::to_string(f.num)}, {"den", std::to_string(f.den)}};
}

Frac frac_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ValidationError("fraction must be an object with decimal strings num/den");
    try {
        return Frac(std::stoll(j.at("num").get<std::string>()),
                    std::stoll(j.at("den").get<std::string>()));
    } catch (const std::exception&) {
        throw ValidationError("malformed fraction: " + j.dump());
    }
}

json prime_spec_to_json(const PrimeSpec& spec) {
    json j{{"p", spec.p}};
    switch (spec.kind) {
        case PrimeSpec::Kind::Rational: break;
        case PrimeSpec::Kind::Root: j["root"] = spec.root; break;
        case PrimeSpec::Kind::Ramified: j["ramified"] = true; break;
        case PrimeSpec::Kind::Inert: j["inert"] = true; break;
    }
    return j;
}

PrimeSpec prime_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p")) throw ValidationError("prime spec needs a field p");
    PrimeSpec spec;
    spec.p = j.at("p").get<i64>();
    if (j.contains("root")) {
        spec.kind = PrimeSpec::Kind::Root;
        spec.root = j.at("root").get<i64>();
    } else if (j.value("ramified", false)) {
        spec.kind = PrimeSpec::Kind::Ramified;
    } else if (j.value("inert", false)) {
        spec.kind = PrimeSpec::Kind::Inert;
    }
    return spec;
}

json local_type_to_json(const LocalType& type) {
    switch (type.kind) {
        case LocalTypeKind::MaximalSplit: return "maximal_split";
        case LocalTypeKind::MaximalDivision: return "maximal_division";
        case LocalTypeKind::Custom: return json{{"custom", type.custom_exponent}};
    }
    throw std::logic_error("unreachable");
}

LocalType local_type_from_json(const json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "maximal_split") return {LocalTypeKind::MaximalSplit, 1};
        if (s == "maximal_division") return {LocalTypeKind::MaximalDivision, 1};
        throw ValidationError("unknown local type: " + s);
    }
    if (j.is_object() && j.contains("custom"))
        return {LocalTypeKind::Custom, j.at("custom").get<int>()};
    throw ValidationError("malformed local type: " + j.dump());
}

json form_to_json(const QuadForm& f) { return json{{"a", f.a}, {"b", f.b}, {"c", f.c}}; }

json class_to_json(const IdealClass& c) { return form_to_json(c.form); }

json subgroup_to_json(const ClassGroup& g, const Subgroup& s) {
    json members = json::array();
    for (int m : s.members()) members.push_back(class_to_json(g.element(m)));
    return json{{"order", s.order()}, {"index", s.index()}, {"members", members}};
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    ScenarioConfig config;
    try {
        config.base_discriminant = j.at("base_discriminant").get<i64>();
        config.degree = j.at("degree").get<int>();
        for (const auto& pair : j.at("min_poly")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ValidationError("min_poly entries are [a, b] coefficient pairs");
            config.min_poly.push_back({pair[0].get<i64>(), pair[1].get<i64>()});
        }
        for (const auto& entry : j.value("invariants", json::array()))
            config.invariants.emplace_back(prime_spec_from_json(entry.at("prime")),
                                           frac_from_json(entry.at("invariant")));
        for (const auto& entry : j.value("order_local_types", json::array()))
            config.order_local_types.emplace_back(prime_spec_from_json(entry.at("prime")),
                                                  local_type_from_json(entry.at("type")));
        config.sampling_bound = j.value("sampling_bound", (i64)1000);
        config.oracle = j.value("oracle", false);
        config.seed = j.value("seed", (std::uint64_t)0);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed config: ") + e.what());
    }
    return config;
}

json serialize_config(const ScenarioConfig& config) {
    json poly = json::array();
    for (const auto& c : config.min_poly) poly.push_back(json::array({c.a, c.b}));
    json invariants = json::array();
    for (const auto& [spec, inv] : config.invariants)
        invariants.push_back(json{{"prime", prime_spec_to_json(spec)},
                                  {"invariant", frac_to_json(inv)}});
    json types = json::array();
    for (const auto& [spec, type] : config.order_local_types)
        types.push_back(json{{"prime", prime_spec_to_json(spec)},
                             {"type", local_type_to_json(type)}});
    return json{{"base_discriminant", config.base_discriminant},
                {"degree", config.degree},
                {"min_poly", poly},
                {"invariants", invariants},
                {"order_local_types", types},
                {"sampling_bound", config.sampling_bound},
                {"oracle", config.oracle},
                {"seed", config.seed}};
}

json run(const ScenarioConfig& config) {
    BaseField k = BaseField::from_discriminant(config.base_discriminant);
    RelativeExtension ext = RelativeExtension::create(k, config.min_poly);
    if (ext.degree() != config.degree)
        throw ValidationError("declared degree " + std::to_string(config.degree) +
                              " does not match the minimal polynomial");
    ClassGroup g = ClassGroup::compute(k);

    OrderGenusSpec spec;
    spec.algebra.field = k;
    spec.algebra.n = config.degree;
    for (const auto& [ps, inv] : config.invariants)
        spec.algebra.finite_invariants.emplace_back(resolve_prime(k, ps), inv);
    for (const auto& [ps, type] : config.order_local_types)
        spec.local_types.emplace_back(resolve_prime(k, ps), type);
    validate_genus(spec);

    NormSubgroup norm = norm_class_subgroup(ext, g, config.sampling_bound, config.seed);
    SelectivityReport report = selectivity_report(spec, g, ext, norm, config.seed);
    StabilizerSubgroup stab = stabilizer_subgroup(spec, g);

    // per-prime local table over the primes that can obstruct or deform
    json table = json::array();
    std::vector<PrimeIdeal> listed;
    for (const auto& [prime, inv] : spec.algebra.finite_invariants) {
        (void)inv;
        listed.push_back(prime);
    }
    for (const auto& [prime, type] : spec.local_types) {
        (void)type;
        if (std::find(listed.begin(), listed.end(), prime) == listed.end())
            listed.push_back(prime);
    }
    for (const auto& prime : listed) {
        auto datum = splitting_type(ext, prime, config.seed);
        auto idx = local_index(spec.algebra, prime);
        json factors = json::array();
        for (auto& [e, f] : datum.factors) factors.push_back(json::array({e, f}));
        json row{{"prime", prime.str()},
                 {"d", idx.d_v},
                 {"m", idx.m_v},
                 {"splitting", factors},
                 {"certified", datum.certified}};
        if (idx.d_v == 1) {
            row["embeddable"] = true;
        } else if (!datum.certified) {
            row["embeddable"] = "undetermined";
        } else {
            row["embeddable"] = local_embeddable(spec.algebra, ext, prime, config.seed);
        }
        table.push_back(row);
    }

    json classes = json::array();
    for (const auto& c : g.elements()) classes.push_back(class_to_json(c));
    json divisors = json::array();
    for (i64 d : g.elementary_divisors()) divisors.push_back(d);

    json skipped = json::array();
    for (const auto& prime : norm.skipped) skipped.push_back(prime.str());

    json derivation = json::array();
    for (const auto& [prime, m] : stab.derivation)
        derivation.push_back(json{{"prime", prime.str()}, {"exponent", m}});

    json embeddable = json::array();
    for (const auto& c : report.embeddable_classes) embeddable.push_back(class_to_json(c));
    json diagnostics = json::array();
    for (const auto& d : report.diagnostics) diagnostics.push_back(d);

    json doc{{"schema", kReportSchema},
             {"tool_version", kToolVersion},
             {"generated_at",
              (i64)std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::system_clock::now().time_since_epoch())
                  .count()},
             {"config", serialize_config(config)},
             {"class_group",
              {{"discriminant", k.discriminant()},
               {"order", g.order()},
               {"elementary_divisors", divisors},
               {"classes", classes}}},
             {"local_table", table},
             {"norm_subgroup",
              {{"subgroup", subgroup_to_json(g, norm.subgroup)},
               {"sampling_bound", norm.sampling_bound},
               {"stabilized", norm.stabilized},
               {"skipped", skipped}}},
             {"stabilizer",
              {{"subgroup", subgroup_to_json(g, stab.subgroup)}, {"derivation", derivation}}},
             {"selectivity",
              {{"genus_class_count", report.genus_class_count},
               {"class_field_degree", report.class_field_degree},
               {"selectivity_degree", report.selectivity_degree},
               {"embeddable_class_count", report.embeddable_class_count},
               {"ratio", frac_to_json(report.ratio)},
               {"exactness", report.exactness == Exactness::Exact ? "exact" : "lower_bound"},
               {"globally_embeddable", report.globally_embeddable},
               {"embeddable_classes", embeddable},
               {"diagnostics", diagnostics}}}};

    if (config.oracle) {
        json verdict;
        try {
            auto oracle_set =
                embeddable_steinitz_set(ext, g, config.degree, config.sampling_bound, config.seed);
            auto cc = cross_check(spec, g, report, oracle_set);
            json set = json::array();
            for (const auto& c : oracle_set) set.push_back(class_to_json(c));
            verdict = json{{"applicable", true},
                           {"match", cc.match},
                           {"orientation", cc.orientation},
                           {"set", set}};
        } catch (const OracleUnavailableError& e) {
            verdict = json{{"applicable", false}, {"reason", e.what()}};
        }
        doc["oracle"] = verdict;
    }
    return doc;
}

std::string explain(const json& report) {
    const json& sel = report.at("selectivity");
    std::string out;
    out += "Base field discriminant " +
           std::to_string(report.at("class_group").at("discriminant").get<i64>()) +
           ", class number " + std::to_string(report.at("class_group").at("order").get<int>()) +
           ".\n";
    out += "Genus of orders: " + std::to_string(sel.at("genus_class_count").get<i64>()) +
           " conjugacy classes (class field of degree " +
           std::to_string(sel.at("class_field_degree").get<i64>()) + ").\n";

    if (!sel.at("globally_embeddable").get<bool>()) {
        out += "A local obstruction rules out the embedding at every class.\n";
    } else {
        i64 emb = sel.at("embeddable_class_count").get<i64>();
        i64 genus = sel.at("genus_class_count").get<i64>();
        bool lower = sel.at("exactness").get<std::string>() == "lower_bound";
        out += "Main criterion: selectivity degree " +
               std::to_string(sel.at("selectivity_degree").get<i64>()) + ".\n";
        if (lower)
            out += "At least " + std::to_string(emb) + " of " + std::to_string(genus) +
                   " conjugacy classes admit the embedding (lower bound regime).\n";
        else
            out += std::to_string(emb) + " of " + std::to_string(genus) +
                   " conjugacy classes " + (emb == 1 ? "admits" : "admit") + " the embedding.\n";
        out += "Ratio theorem: embedding ratio " +
               sel.at("ratio").at("num").get<std::string>() + "/" +
               sel.at("ratio").at("den").get<std::string>() + ".\n";
        bool division = false;
        for (const auto& row : report.at("local_table"))
            if (row.at("d").get<int>() == report.at("config").at("degree").get<int>())
                division = true;
        if (division && emb == genus)
            out += "Totally ramified case: a division prime forces every class to admit it.\n";
    }

    out += "Norm subgroup index " +
           std::to_string(report.at("norm_subgroup").at("subgroup").at("index").get<i64>()) +
           (report.at("norm_subgroup").at("stabilized").get<bool>()
                ? " (stabilized).\n"
                : " (NOT stabilized; raise the sampling bound).\n");
    out += "Stabilizer generators from listed primes:\n";
    for (const auto& d : report.at("stabilizer").at("derivation"))
        out += "  " + d.at("prime").get<std::string>() + " with exponent " +
               std::to_string(d.at("exponent").get<i64>()) + "\n";

    if (report.contains("oracle")) {
        const json& oracle = report.at("oracle");
        if (!oracle.at("applicable").get<bool>())
            out += "Lattice oracle: not applicable (" + oracle.at("reason").get<std::string>() +
                   ").\n";
        else if (oracle.at("match").get<bool>())
            out += "Lattice oracle: match (" + oracle.at("orientation").get<std::string>() +
                   " orientation).\n";
        else
            out += "*** LATTICE ORACLE MISMATCH: the independent module-theoretic count "
                   "disagrees with the class-field computation. ***\n";
    }
    for (const auto& d : sel.at("diagnostics"))
        out += "note: " + d.get<std::string>() + "\n";
    return out;
}

int exit_code_for(const json& report) {
    if (report.contains("oracle")) {
        const json& oracle = report.at("oracle");
        if (oracle.at("applicable").get<bool>() && !oracle.at("match").get<bool>()) return 3;
    }
    return 0;
}

}  // namespace selcsa
