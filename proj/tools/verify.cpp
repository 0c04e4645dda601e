#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <goldie/suites.hpp>

int main(int argc, char** argv) {
    goldie::SuiteSpec spec;
    std::string out_path;
    std::string format = "json";

    CLI::App app{"verification suites for graded-ring constructions"};
    app.set_help_flag("--help", "print usage");
    app.add_option("suite", spec.suite, "suite to run")
        ->required()
        ->check(CLI::IsMember({"group-conditions", "klyachko", "counterexample", "nastasescu",
                               "bazhenov", "quotient", "gs-construction", "remark1-audit",
                               "all"}));
    app.add_option("--group", spec.group, "group instance (d-infty, bs12, z, z2, s3, q8, d4, a4, dprod)");
    app.add_option("--g", spec.g_word, "group word for the shift generator");
    app.add_option("--h", spec.h_word, "group word for the payload degree");
    app.add_option("--n-max", spec.n_max, "chain length / exponent search bound");
    app.add_option("--m-max", spec.m_max, "induction depth / second search bound");
    app.add_option("--max-degree", spec.max_degree, "census and audit degree window");
    app.add_option("--coeff-bound", spec.coeff_bound, "census coefficient variants");
    app.add_option("--samples", spec.samples, "sampled-property trial count");
    app.add_option("--seed", spec.seed, "random seed");
    app.add_option("--field", spec.field, "coefficient field: q or fp:P");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        const goldie::Report report = goldie::run_suite(spec);
        const std::string rendered =
            format == "text" ? report.to_text() : report.to_json().dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "verify: cannot open " << out_path << " for writing\n";
                return 3;
            }
            out << rendered;
        }
        return report.exit_code();
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 3;
    } catch (const goldie::SyntaxError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 3;
    } catch (const goldie::UnknownSymbol& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 3;
    }
}
