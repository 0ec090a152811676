// Command-line driver: parse a presentation file, run the requested pipeline,
// emit a text or JSON report.  Exit code 0 = all tasks pass, 1 = some task
// failed (the first violated identity is named), 2 = inconclusive (a
// resolution cap was reached before a definite answer).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dgaus/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dgaus: build and verify block algebras of Artinian rings"};
    app.require_subcommand(1);

    std::string input, field, format = "text", out;
    std::uint64_t seed = 1;
    long long cap = 40;

    for (const auto& name : dgaus::all_subcommands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", input, "presentation file")->required();
        sub->add_option("--field", field, "working field: q or fp:<p>");
        sub->add_option("--seed", seed, "seed for randomized checks");
        sub->add_option("--cap", cap, "resolution length cap")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "report format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "write the report to this path instead of stdout");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string subcommand = app.get_subcommands().front()->get_name();

    try {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open '" << input << "'\n";
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        auto pres = dgaus::parse_presentation(buf.str());

        dgaus::RunOptions opt;
        opt.field_override = field;
        opt.seed = seed;
        opt.cap = static_cast<std::size_t>(cap);
        auto rep = dgaus::run_command(subcommand, pres, opt);

        std::string rendered = format == "json" ? dgaus::emit_json(rep) : dgaus::emit_text(rep);
        if (out.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream of(out, std::ios::binary);
            if (!of) {
                std::cerr << "error: cannot write '" << out << "'\n";
                return 1;
            }
            of << rendered;
        }
        return rep.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
