// Command-line front end: validate | cohomology | arrow | obstruct | bracket.

#include "aqcoh/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int deliver(const aqc::Report& r, const std::string& json_path) {
    std::cout << r.text;
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << '\n';
            return aqc::exit_parse;
        }
        out << r.json;
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Andre-Quillen cohomology of truncated stable Pi-algebras"};
    app.require_subcommand(1);
    std::string path, json_path, algebra, module, resolution, map, coefficients;
    int max_degree = 5, stages = 2;

    const auto with_common = [&](CLI::App* sub) {
        sub->add_option("document", path, "JSON input document")->required();
        sub->add_option("--json", json_path, "write the machine-readable mirror here");
    };
    CLI::App* validate = app.add_subcommand("validate", "check every declared object");
    with_common(validate);

    CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology of an algebra with module coefficients");
    with_common(cohomology);
    cohomology->add_option("--algebra", algebra)->required();
    cohomology->add_option("--module", module)->required();
    cohomology->add_option("--resolution", resolution, "defaults to the first resolution of the algebra");
    cohomology->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

    CLI::App* arrow = app.add_subcommand("arrow", "cohomology of a map and its long exact sequence");
    with_common(arrow);
    arrow->add_option("--map", map)->required();
    arrow->add_option("--coefficients", coefficients, "coefficient map; defaults to the loop of the map");
    arrow->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

    CLI::App* obstruct = app.add_subcommand("obstruct", "obstruction host groups and bracket verdicts");
    with_common(obstruct);
    obstruct->add_option("--map", map)->required();
    obstruct->add_option("--stages", stages)->check(CLI::NonNegativeNumber);

    CLI::App* brackets = app.add_subcommand("bracket", "bracket cosets and realizability checks");
    with_common(brackets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : aqc::exit_parse;
    }

    try {
        const aqc::Document doc = aqc::load_document(path);
        if (*validate)
            return deliver(aqc::validate_report(doc), json_path);
        if (*cohomology)
            return deliver(aqc::cohomology_report(doc, algebra, module, resolution, max_degree), json_path);
        if (*arrow)
            return deliver(aqc::arrow_report(doc, map, coefficients, max_degree), json_path);
        if (*obstruct)
            return deliver(aqc::obstruct_report(doc, map, stages), json_path);
        return deliver(aqc::bracket_report(doc), json_path);
    } catch (const aqc::DocumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return aqc::exit_parse;
    } catch (const aqc::StructuralError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return aqc::exit_failure;
    } catch (const aqc::WindowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return aqc::exit_failure;
    } catch (const aqc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return aqc::exit_failure;
    }
}
