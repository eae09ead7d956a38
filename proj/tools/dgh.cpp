#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dgh/cli.hpp"
#include "dgh/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact checks and computations for finite-dimensional cdg-Hopf algebras"};
    std::string command, path, format = "text", output;
    dgh::CommandOptions opts;
    std::string commands;
    for (auto& c : dgh::command_names()) commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + commands)->required()->check(CLI::IsMember(dgh::command_names()));
    app.add_option("bundle", path, "bundle file")->required();
    app.add_option("--kind", opts.kind, "what verify looks at (auto, algebra, coalgebra, bialgebra, hopf, "
                                        "comodule, group, tangential, morphism, complex)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--flow-degree", opts.flow_degree, "largest t-degree of ξ(t) tried by homotopy");
    app.add_option("--probe-pairs", opts.probe_pairs, "comodule pairs used by reconstruct");
    app.add_option("--output", output, "write the bundle with computed results added");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        dgh::Bundle b = dgh::load_bundle(path);
        dgh::Outcome o = dgh::run_command(command, b, opts);
        std::cout << (format == "json" ? dgh::render_json(o) : dgh::render_text(o));
        if (!output.empty()) {
            std::ofstream f(output, std::ios::binary);
            f << dgh::serialize_bundle(o.updated);
        }
        return o.exit_code();
    } catch (const dgh::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
