#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cleanmat/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact strong-cleanness toolkit for matrices over commutative rings"};
    std::string file;
    bool deterministic = false;
    std::int64_t budget = 0;
    int order = 8;
    app.add_option("--file", file, "read the JSON request from this file instead of stdin");
    app.add_flag("--deterministic", deterministic,
                 "request byte-stable output (output is canonical either way)");
    app.add_option("--budget", budget, "cap every search budget at this many steps");
    app.add_option("--order", order,
                   "truncation length for series descriptors that omit one (default 8)");
    CLI11_PARSE(app, argc, argv);

    std::string input;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open " << file << "\n";
            return 2;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        input = buffer.str();
    } else {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        input = buffer.str();
    }

    cleanmat::CliOptions opts;
    opts.deterministic = deterministic;
    if (budget > 0) opts.budget = budget;
    opts.default_order = order;
    return cleanmat::run_request(input, std::cout, std::cerr, opts);
}
