#include <CLI11.hpp>

#include "conormal/complex.hpp"
#include "conormal/errors.hpp"
#include "conormal/homology.hpp"
#include "conormal/ktheory.hpp"
#include "conormal/orbit.hpp"
#include "conormal/poset.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSyntax = 1;      // syntax / IO / usage
constexpr int kExitValidation = 2;  // data fails the structural invariants
constexpr int kExitInternal = 3;    // proven identity failed: a bug

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << text;
}

conormal::CornerPoset make_builder(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::optional<int> arg;
    if (colon != std::string::npos) {
        try {
            arg = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("builder spec `" + spec + "`: bad integer argument");
        }
    }

    if (name == "interval" && !arg) return conormal::interval();
    if (name == "closed" && !arg) return conormal::closed_manifold();
    if (name == "boundary" && arg) return conormal::boundary_components(*arg);
    if (name == "simplex" && arg) return conormal::simplex(*arg);
    if (name == "cube" && arg) return conormal::hypercube(*arg);
    throw std::invalid_argument("unknown builder spec `" + spec +
                                "` (expected interval|closed|boundary:p|simplex:k|cube:k)");
}

std::string validation_text(const conormal::ValidationReport& report) {
    std::string out;
    for (const auto& v : report.violations) out += v.rule + ": " + v.detail + "\n";
    out += "INVALID: " + std::to_string(report.violations.size()) + " violation(s)\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conormal homology and rational K-theory of manifolds with embedded corners"};
    app.require_subcommand(1);

    std::string input;
    std::string input_b;
    std::string output;
    std::string builder_spec;
    bool rational = false;
    bool dump = false;
    std::optional<int> ambient_degree;

    CLI::App* cmd_validate = app.add_subcommand("validate", "check the structural invariants of a poset file");
    cmd_validate->add_option("file", input, "poset file (default: stdin)");

    CLI::App* cmd_homology = app.add_subcommand("homology", "per-degree conormal homology groups");
    cmd_homology->add_option("file", input, "poset file (default: stdin)");
    cmd_homology->add_flag("--rational", rational, "also print rational Betti numbers");
    cmd_homology->add_flag("--dump-matrices", dump, "dump the differential matrices");

    CLI::App* cmd_ktheory = app.add_subcommand("ktheory", "rational K-theory ranks and obstruction verdict");
    cmd_ktheory->add_option("file", input, "poset file (default: stdin)");

    CLI::App* cmd_crosscheck =
        app.add_subcommand("crosscheck", "compare the conormal and orbit-cochain computation paths");
    cmd_crosscheck->add_option("file", input, "poset file (default: stdin)");
    cmd_crosscheck->add_option("--ambient-degree", ambient_degree, "even ambient degree N (default: derived)");

    CLI::App* cmd_build = app.add_subcommand("build", "emit a builder poset in the file format");
    cmd_build->add_option("spec", builder_spec, "interval|closed|boundary:p|simplex:k|cube:k")->required();
    cmd_build->add_option("-o,--output", output, "output file (default: stdout)");

    CLI::App* cmd_product = app.add_subcommand("product", "emit the product of two poset files");
    cmd_product->add_option("fileA", input, "first factor")->required();
    cmd_product->add_option("fileB", input_b, "second factor")->required();
    cmd_product->add_option("-o,--output", output, "output file (default: stdout)");

    CLI::App* cmd_report =
        app.add_subcommand("report", "combined validation + homology + crosscheck + ktheory report");
    cmd_report->add_option("file", input, "poset file (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSyntax;
    }

    try {
        if (cmd_validate->parsed()) {
            conormal::CornerPoset poset = conormal::read_poset(read_input(input));
            conormal::ValidationReport report = conormal::validate(poset);
            if (!report.ok()) {
                std::cout << validation_text(report);
                return kExitValidation;
            }
            std::cout << "OK: valid corner poset (n=" << poset.hypersurface_count()
                      << ", d=" << poset.max_codim() << ", faces=" << poset.faces().size()
                      << ", adjacencies=" << poset.adjacencies().size() << ")\n";
            return kExitOk;
        }

        if (cmd_homology->parsed()) {
            conormal::CornerPoset poset = conormal::parse(read_input(input));
            conormal::ConormalComplex complex = conormal::build_complex(poset);
            conormal::HomologySummary summary = conormal::full_summary(complex);
            std::cout << summary.str();
            if (rational)
                for (std::size_t p = 0; p < summary.betti.size(); ++p)
                    std::cout << "b_" << p << " = " << summary.betti[p] << "\n";
            if (dump) std::cout << conormal::dump_matrices(complex);
            return kExitOk;
        }

        if (cmd_ktheory->parsed()) {
            conormal::CornerPoset poset = conormal::parse(read_input(input));
            std::cout << conormal::ktheory(poset).str();
            return kExitOk;
        }

        if (cmd_crosscheck->parsed()) {
            conormal::CornerPoset poset = conormal::parse(read_input(input));
            conormal::ComparisonReport report = conormal::assert_B_isomorphism(poset, ambient_degree);
            std::cout << report.str();
            return report.pass ? kExitOk : kExitInternal;
        }

        if (cmd_build->parsed()) {
            write_output(conormal::serialize(make_builder(builder_spec)), output);
            return kExitOk;
        }

        if (cmd_product->parsed()) {
            conormal::CornerPoset a = conormal::parse(read_input(input));
            conormal::CornerPoset b = conormal::parse(read_input(input_b));
            write_output(conormal::serialize(conormal::product(a, b)), output);
            return kExitOk;
        }

        if (cmd_report->parsed()) {
            conormal::CornerPoset poset = conormal::read_poset(read_input(input));
            std::cout << "== validate ==\n";
            conormal::ValidationReport report = conormal::validate(poset);
            if (!report.ok()) {
                std::cout << validation_text(report);
                return kExitValidation;
            }
            std::cout << "OK: valid corner poset (n=" << poset.hypersurface_count()
                      << ", d=" << poset.max_codim() << ", faces=" << poset.faces().size()
                      << ", adjacencies=" << poset.adjacencies().size() << ")\n";

            conormal::ConormalComplex complex = conormal::build_complex(poset);
            std::cout << "\n== homology ==\n" << conormal::full_summary(complex).str();

            conormal::ComparisonReport crosscheck = conormal::assert_B_isomorphism(poset);
            std::cout << "\n== crosscheck ==\n" << crosscheck.str();

            std::cout << "\n== ktheory ==\n" << conormal::ktheory(poset).str();
            return crosscheck.pass ? kExitOk : kExitInternal;
        }
    } catch (const conormal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const conormal::AmbiguityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const conormal::ValidationError& e) {
        std::cerr << "error: " << e.what();
        return kExitValidation;
    } catch (const conormal::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    }

    return kExitSyntax;
}
