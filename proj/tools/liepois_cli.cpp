// Command-line driver: load an algebra, run the verification pipeline,
// emit a certificate. Exit status: 0 all checks pass, 1 check failure,
// 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liepois/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact formal linearization of the dual Poisson structure of a "
                 "quasitriangular Lie bialgebra"};
    liepois::RunConfig cfg;
    std::string output = "text";
    std::vector<std::string> nu_strings;
    std::string checks_csv;

    app.add_option("--algebra", cfg.algebra,
                   "builtin name (sl2, abelian2) or path to an algebra JSON file")
        ->capture_default_str();
    app.add_option("--degree", cfg.degree, "truncation degree N")->capture_default_str();
    app.add_option("--nu", nu_strings, "rational nu value for the fm check (repeatable)");
    app.add_option("--checks", checks_csv,
                   "comma-separated subset of cyb,cdybe,solve,pushforward,gauge,fm,lemma1");
    app.add_option("--seed", cfg.seed, "seed for randomized gauge elements")
        ->capture_default_str();
    app.add_option("--output", output, "text | structured")->capture_default_str();
    app.add_flag("--trace", cfg.trace, "include solver trace and timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto& s : nu_strings)
            cfg.nu_values.push_back(liepois::Rational::from_string(s));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bad --nu value: %s\n", e.what());
        return 2;
    }
    if (!checks_csv.empty()) {
        size_t start = 0;
        while (start <= checks_csv.size()) {
            size_t comma = checks_csv.find(',', start);
            std::string piece = checks_csv.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!piece.empty()) cfg.checks.push_back(piece);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (output != "text" && output != "structured") {
        std::fprintf(stderr, "--output must be text or structured\n");
        return 2;
    }

    try {
        liepois::Certificate cert = liepois::run(cfg);
        if (output == "structured")
            std::cout << cert.to_json().dump(2) << "\n";
        else
            std::cout << cert.to_text();
        return cert.all_pass() ? 0 : 1;
    } catch (const liepois::InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const liepois::DegreeOverflow& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
