// Command line front end: check, cohomology, connection, presentation.

#include "eqlr/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace eqlr;
using namespace eqlr::cli;

int emit(const report::Report& r, const std::string& format) {
    if (format == "json")
        std::cout << report::emit(r) << "\n";
    else
        std::cout << render_text(r);
    return r.exit_code;
}

std::pair<int, int> parse_window(const std::string& text) {
    auto colon = text.find(':', text.front() == '-' ? 1 : 0);
    if (colon == std::string::npos)
        throw InputError("--window: expected LO:HI");
    try {
        std::size_t a = 0, b = 0;
        int lo = std::stoi(text.substr(0, colon), &a);
        int hi = std::stoi(text.substr(colon + 1), &b);
        if (a != colon || b != text.size() - colon - 1)
            throw std::invalid_argument(text);
        if (lo > hi)
            throw InputError("--window: LO exceeds HI");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InputError("--window: expected LO:HI with integers");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Lie-Rinehart cohomology of quasi-homogeneous surface singularities"};
    app.require_subcommand(1);
    std::string spec_path, module_path, connection_path, format = "text", window;
    int max_n = -1;
    bool invariants = false, equivariant = false;

    auto* check = app.add_subcommand("check", "validate a problem document");
    check->add_option("spec", spec_path, "problem document (YAML)")->required();
    check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* coh = app.add_subcommand("cohomology", "dimensions of H^n(Der_k(A), A) over a degree window");
    coh->add_option("spec", spec_path, "problem document (YAML)")->required();
    coh->add_option("--max-n", max_n, "highest cohomological degree (default 2)")->check(CLI::NonNegativeNumber);
    coh->add_option("--window", window, "internal degree window LO:HI (default from spec, else -10:10)");
    coh->add_flag("--invariants", invariants, "add the invariant (weight 0) columns");
    coh->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* con = app.add_subcommand("connection", "verify a connection and decide integrability");
    con->add_option("spec", spec_path, "problem document (YAML)")->required();
    con->add_option("--module", module_path, "module document (YAML)")->required();
    con->add_option("--connection", connection_path, "connection document (YAML)")->required();
    con->add_flag("--equivariant", equivariant, "work with invariant connections and the invariant blocks");
    con->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* pres = app.add_subcommand("presentation", "generators and relations of Der_k(A)");
    pres->add_option("spec", spec_path, "problem document (YAML)")->required();
    pres->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        ProblemSpec spec = load_problem(spec_path);
        if (*check)
            return emit(run_check(spec), format);
        if (*coh) {
            CohomologyOptions opt;
            if (max_n >= 0)
                opt.max_n = max_n;
            if (!window.empty())
                opt.window = parse_window(window);
            opt.invariants = invariants;
            return emit(run_cohomology(spec, opt), format);
        }
        if (*con)
            return emit(run_connection(spec, load_module(module_path), load_connection(connection_path), equivariant),
                        format);
        if (*pres)
            return emit(run_presentation(spec), format);
    } catch (const InputError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const NotInSpanError& e) {
        std::cerr << "instability: " << e.what() << "; raise the presentation bound\n";
        return kInstability;
    }
    return kOk;
}
