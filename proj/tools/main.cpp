#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "confobs/commands.hpp"

namespace {

int emit(const confobs::Report& r, const std::string& format) {
    std::cout << (format == "json" ? r.to_json() : r.to_text());
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Obstruction-theoretic non-formality checks for configuration spaces over GF(2)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CONFOBS_VERSION);

    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    int k = 4, t = 2;
    std::optional<int> max_degree;
    auto* dims = app.add_subcommand("dims", "Count filtered Barratt-Eccles simplices by degree");
    dims->add_option("--k", k, "Arity")->required();
    dims->add_option("--t", t, "Complexity")->required();
    dims->add_option("--max-degree", max_degree, "Highest degree to enumerate");
    dims->fallthrough();

    auto* basics = app.add_subcommand("verify-basics", "Cochain identities, coproducts and chain compositions");
    basics->fallthrough();

    std::optional<std::uint64_t> gauge_seed;
    std::string emit_path;
    auto* obstruct = app.add_subcommand("obstruct", "Compute the obstruction class and its verdict");
    obstruct->add_option("--gauge-seed", gauge_seed, "Rerun under a pseudorandom gauge shift");
    obstruct->add_option("--emit", emit_path, "Write the alpha matrix as JSON");
    obstruct->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*dims) return emit(confobs::cmd_dims(k, t, max_degree), format);
        if (*basics) return emit(confobs::cmd_verify_basics(), format);
        confobs::AlphaMap alpha;
        const auto report = confobs::cmd_obstruct({gauge_seed}, &alpha);
        if (!emit_path.empty()) {
            std::ofstream out(emit_path);
            if (!out) throw confobs::UsageError("cannot write " + emit_path);
            out << confobs::alpha_json(alpha);
        }
        return emit(report, format);
    } catch (const confobs::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
