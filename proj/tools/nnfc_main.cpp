#include "nnfc/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

int main(int argc, char** argv)
{
    CLI::App app{"Decide refutability of two-literal and disjunction-free first-order formulas"};
    app.require_subcommand(1);

    nnfc::RunConfig cfg;
    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"decide", "decide a formula and print the verdict"},
        {"prune", "remove literals that belong to no unifiable pair"},
        {"verify", "check a certificate"},
        {"oracle-check", "cross-check every verdict and transformation against the oracles"},
        {"pipeline-dump", "print the intermediate stages for every connected pair"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("file", cfg.input_path, "input file (stdin when absent)");
        sub->add_flag("--json", cfg.json, "print a JSON document");
        sub->add_flag("--emit-certificate", cfg.emit_certificate, "print the refutation certificate");
        sub->add_flag("--oracle", cfg.oracle, "re-check results with the independent oracles");
        sub->add_flag("--trace", cfg.trace, "print the intermediate stages after the verdict");
        sub->add_option("--max-model-size", cfg.max_model_size, "largest domain for model checks")
            ->check(CLI::Range(1, 3));
        sub->callback([&cfg, name = std::string(s.name)] { cfg.command = *nnfc::parse_command(name); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : nnfc::exit_code::usage;
    }

    std::string input;
    if (cfg.input_path.empty() || cfg.input_path == "-") {
        input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(cfg.input_path);
        if (!in) {
            std::cerr << "error: cannot read " << cfg.input_path << "\n";
            return nnfc::exit_code::usage;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        input = buf.str();
    }

    nnfc::RunResult r = nnfc::run(cfg, input);
    std::cout << r.out;
    return r.code;
}
