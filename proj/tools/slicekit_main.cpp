#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slicekit/commands.hpp"

namespace {

// 0: every check passed; 1: a check failed or stayed unresolved;
// 2: bad input (file, syntax, missing tables, usage); 3: internal invariant broken.
int dispatch(const CLI::App& app, const slicekit::RunOptions& options, const std::string& file,
             const std::string& corpus_mode) {
    using namespace slicekit;

    if (app.got_subcommand("verify"))
        return emit(run_verify(load_problem_file(file), options), std::cout, options);
    if (app.got_subcommand("linearize"))
        return emit(run_linearize(load_problem_file(file), options), std::cout, options);
    if (app.got_subcommand("kernel"))
        return emit(run_kernel(load_problem_file(file), options), std::cout, options);
    return emit(run_corpus(corpus_mode == "list", options), std::cout, options);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for locally nilpotent derivations with a slice:\n"
                 "semisimple actions, linearization certificates, kernel bases"};
    app.require_subcommand(1);

    slicekit::RunOptions options;
    std::string file;
    std::string corpus_mode = "run";

    auto add_common = [&options](CLI::App* sub) {
        sub->add_flag("--json-only", options.json_only, "print only the JSON report");
        sub->add_flag("--quiet", options.quiet, "omit per-check detail from the text report");
        sub->add_option("--bound", options.nilpotency_bound,
                        "iteration budget for the nilpotency probe");
        sub->add_option("--degree", options.degree_bound, "degree bound for kernel searches");
    };

    auto* verify = app.add_subcommand("verify", "action identities for a problem file");
    verify->add_option("file", file, "problem file")->required()->check(CLI::ExistingFile);
    add_common(verify);

    auto* linearize =
        app.add_subcommand("linearize", "normalization conditions and the certificate");
    linearize->add_option("file", file, "problem file")->required()->check(CLI::ExistingFile);
    add_common(linearize);

    auto* kernel = app.add_subcommand("kernel", "degree-bounded kernel and invariant search");
    kernel->add_option("file", file, "problem file")->required()->check(CLI::ExistingFile);
    kernel->add_flag("--ideal", options.use_ideal,
                     "work in the quotient by the [ideal] generators");
    add_common(kernel);

    auto* corpus = app.add_subcommand("corpus", "built-in worked examples");
    corpus->add_option("mode", corpus_mode, "run (default) or list")
        ->check(CLI::IsMember({"run", "list"}));
    add_common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, options, file, corpus_mode);
    } catch (const slicekit::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const slicekit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
