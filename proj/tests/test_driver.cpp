#include <doctest.h>

#include "selcsa/driver.hpp"
#include "selcsa/errors.hpp"

using namespace selcsa;
using nlohmann::json;

namespace {

json golden_cubic_config() {
    return json::parse(R"({
        "base_discriminant": -23,
        "degree": 3,
        "min_poly": [[-1,0],[-1,0],[0,0],[1,0]],
        "invariants": [],
        "order_local_types": [],
        "sampling_bound": 1000,
        "oracle": true,
        "seed": 7
    })");
}

}  // namespace

TEST_CASE("prime resolution from config selectors") {
    BaseField k = BaseField::imaginary_quadratic(-23);
    CHECK(resolve_prime(k, PrimeSpec{2, PrimeSpec::Kind::Root, 0}).root == 0);
    CHECK(resolve_prime(k, PrimeSpec{2, PrimeSpec::Kind::Root, 1}).root == 1);
    CHECK(resolve_prime(k, PrimeSpec{23, PrimeSpec::Kind::Ramified, 0}).type ==
          SplitType::Ramified);
    CHECK(resolve_prime(k, PrimeSpec{5, PrimeSpec::Kind::Inert, 0}).type == SplitType::Inert);
    CHECK_THROWS_AS(resolve_prime(k, PrimeSpec{5, PrimeSpec::Kind::Ramified, 0}),
                    ValidationError);
    CHECK_THROWS_AS(resolve_prime(k, PrimeSpec{2, PrimeSpec::Kind::Rational, 0}),
                    ValidationError);
    BaseField q = BaseField::rationals();
    CHECK(resolve_prime(q, PrimeSpec{7, PrimeSpec::Kind::Rational, 0}).p == 7);
}

TEST_CASE("config round-trips through JSON") {
    json j = golden_cubic_config();
    j["invariants"] = json::array(
        {{{"prime", {{"p", 2}, {"root", 0}}}, {"invariant", {{"num", "1"}, {"den", "3"}}}},
         {{"prime", {{"p", 2}, {"root", 1}}}, {"invariant", {{"num", "2"}, {"den", "3"}}}}});
    j["order_local_types"] =
        json::array({{{"prime", {{"p", 5}, {"inert", true}}}, {"type", "maximal_split"}},
                     {{"prime", {{"p", 23}, {"ramified", true}}}, {"type", {{"custom", 3}}}}});
    ScenarioConfig config = parse_config(j);
    CHECK(config.base_discriminant == -23);
    CHECK(config.min_poly.size() == 4);
    CHECK(config.invariants.size() == 2);
    CHECK(config.invariants[1].second == Frac(2, 3));
    CHECK(config.order_local_types[1].second.kind == LocalTypeKind::Custom);
    ScenarioConfig again = parse_config(serialize_config(config));
    CHECK(serialize_config(again) == serialize_config(config));

    CHECK_THROWS_AS(parse_config(json::array()), ValidationError);
    json bad = golden_cubic_config();
    bad.erase("min_poly");
    CHECK_THROWS_AS(parse_config(bad), ValidationError);
}

TEST_CASE("the golden cubic scenario") {
    json report = run(parse_config(golden_cubic_config()));
    CHECK(report.at("schema") == kReportSchema);
    CHECK(report.at("class_group").at("order") == 3);
    const json& sel = report.at("selectivity");
    CHECK(sel.at("genus_class_count") == 3);
    CHECK(sel.at("selectivity_degree") == 3);
    CHECK(sel.at("embeddable_class_count") == 1);
    CHECK(sel.at("ratio").at("num") == "1");
    CHECK(sel.at("ratio").at("den") == "3");
    CHECK(sel.at("exactness") == "exact");
    CHECK(report.at("norm_subgroup").at("subgroup").at("index") == 3);
    CHECK(report.at("norm_subgroup").at("stabilized") == true);
    CHECK(report.at("oracle").at("applicable") == true);
    CHECK(report.at("oracle").at("match") == true);
    CHECK(exit_code_for(report) == 0);

    std::string text = explain(report);
    CHECK(text.find("1 of 3 conjugacy classes admits the embedding") != std::string::npos);
    CHECK(text.find("Lattice oracle: match") != std::string::npos);

    // a mismatching oracle verdict is loud and fatal
    json mutated = report;
    mutated["oracle"]["match"] = false;
    CHECK(exit_code_for(mutated) == 3);
    CHECK(explain(mutated).find("LATTICE ORACLE MISMATCH") != std::string::npos);
}

TEST_CASE("ramified scenario reaches every class") {
    json j = golden_cubic_config();
    j["oracle"] = false;
    j["invariants"] = json::array(
        {{{"prime", {{"p", 2}, {"root", 0}}}, {"invariant", {{"num", "1"}, {"den", "3"}}}},
         {{"prime", {{"p", 2}, {"root", 1}}}, {"invariant", {{"num", "2"}, {"den", "3"}}}}});
    json report = run(parse_config(j));
    const json& sel = report.at("selectivity");
    CHECK(sel.at("genus_class_count") == 1);
    CHECK(sel.at("embeddable_class_count") == 1);
    CHECK(sel.at("ratio").at("num") == "1");
    CHECK(sel.at("ratio").at("den") == "1");
    for (const json& row : report.at("local_table")) {
        CHECK(row.at("d") == 3);
        CHECK(row.at("certified") == true);
        CHECK(row.at("embeddable") == true);
    }
    CHECK(explain(report).find("Totally ramified case") != std::string::npos);
    CHECK(exit_code_for(report) == 0);
}

TEST_CASE("reports are deterministic apart from the timestamp") {
    ScenarioConfig config = parse_config(golden_cubic_config());
    json a = run(config);
    json b = run(config);
    a.erase("generated_at");
    b.erase("generated_at");
    CHECK(a == b);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("invalid invariants are rejected before any computation") {
    json j = golden_cubic_config();
    j["invariants"] = json::array(
        {{{"prime", {{"p", 2}, {"root", 0}}}, {"invariant", {{"num", "1"}, {"den", "3"}}}}});
    CHECK_THROWS_AS(run(parse_config(j)), ValidationError);  // reciprocity

    json wrongdeg = golden_cubic_config();
    wrongdeg["degree"] = 4;
    CHECK_THROWS_AS(run(parse_config(wrongdeg)), ValidationError);
}

TEST_CASE("lower-bound wording for custom local types") {
    json j = golden_cubic_config();
    j["oracle"] = false;
    j["order_local_types"] =
        json::array({{{"prime", {{"p", 2}, {"root", 0}}}, {"type", {{"custom", 3}}}}});
    json report = run(parse_config(j));
    CHECK(report.at("selectivity").at("exactness") == "lower_bound");
    CHECK(explain(report).find("At least") != std::string::npos);
}
