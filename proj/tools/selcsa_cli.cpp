#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "selcsa/driver.hpp"
#include "selcsa/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Embedding selectivity for orders in central simple algebras"};

    std::string config_path;
    std::string format = "json";
    long long bound = -1;
    long long seed = -1;
    bool check_oracle = false;
    bool version = false;

    app.add_option("--config", config_path, "Path to a scenario config (JSON)");
    app.add_option("--bound", bound, "Override the norm-sampling bound");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--check-oracle", check_oracle, "Cross-check with the lattice oracle");
    app.add_option("--seed", seed, "Override the factorization seed");
    app.add_flag("--version", version, "Print the tool version");

    CLI11_PARSE(app, argc, argv);

    if (version) {
        std::cout << selcsa::kToolVersion << "\n";
        return 0;
    }
    if (config_path.empty()) {
        std::cerr << "error: --config is required\n";
        return 1;
    }

    try {
        std::ifstream in(config_path);
        if (!in) throw selcsa::ValidationError("cannot open config file: " + config_path);
        nlohmann::json raw = nlohmann::json::parse(in, nullptr, true);
        selcsa::ScenarioConfig config = selcsa::parse_config(raw);
        if (bound >= 0) config.sampling_bound = bound;
        if (seed >= 0) config.seed = (std::uint64_t)seed;
        if (check_oracle) config.oracle = true;

        nlohmann::json report = selcsa::run(config);
        if (format == "json")
            std::cout << report.dump(2) << "\n";
        else
            std::cout << selcsa::explain(report);
        return selcsa::exit_code_for(report);
    } catch (const selcsa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)e.code();
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid config: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
