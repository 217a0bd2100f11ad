/**
 * @file seqrank_main.cpp
 * @brief CLI front end: subcommand dispatch onto the cmd_* entry points.
 */

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "seqrank/io.hpp"
#include "seqrank/ranks.hpp"

namespace {

/// SEQRANK_TOL overrides the residual tolerance. A malformed value aborts
/// startup instead of silently falling back to the default.
bool read_tol(double& tol, std::string& message) {
    const char* env = std::getenv("SEQRANK_TOL");
    if (env == nullptr) return true;
    std::string text(env);
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size() || !(v > 0.0)) throw std::invalid_argument("out of range");
        tol = v;
        return true;
    } catch (const std::exception&) {
        message = "SEQRANK_TOL must be a positive decimal, got '" + text + "'";
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    double tol = seqrank::kResidualTol;
    std::string tol_error;
    if (!read_tol(tol, tol_error)) {
        std::cerr << "error: " << tol_error << "\n";
        return 1;
    }

    CLI::App app{"rank certificates for complex-rational sequences"};
    app.require_subcommand(1);

    std::string path;
    std::string kind;
    bool json = false;

    CLI::App* rank = app.add_subcommand("rank", "decide and certify the rank of a sequence file");
    rank->add_option("file", path, "sequence file")->required();
    rank->add_option("--kind", kind, "rrank, mrank, or urank; defaults to the file's @index")
        ->check(CLI::IsMember({"rrank", "mrank", "urank"}));
    rank->add_flag("--json", json, "machine-readable certificate");

    CLI::App* recover =
        app.add_subcommand("recover", "recover the finite-atomic measure behind a sequence file");
    recover->add_option("file", path, "sequence file")->required();
    recover->add_flag("--json", json, "machine-readable report");

    CLI::App* gf = app.add_subcommand("genfun", "display the ordinary generating function");
    gf->add_option("file", path, "sequence file")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "cross-check the five equivalent rank conditions");
    verify->add_option("file", path, "sequence file")->required();

    CLI::App* walks =
        app.add_subcommand("walks", "closed-walk spectrum report for an adjacency matrix");
    walks->add_option("file", path, "square matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (rank->parsed()) return seqrank::cmd_rank(path, kind, json, std::cout, std::cerr, tol);
    if (recover->parsed()) return seqrank::cmd_recover(path, json, std::cout, std::cerr, tol);
    if (gf->parsed()) return seqrank::cmd_genfun(path, std::cout, std::cerr, tol);
    if (verify->parsed()) return seqrank::cmd_verify(path, std::cout, std::cerr, tol);
    if (walks->parsed()) return seqrank::cmd_walks(path, std::cout, std::cerr, tol);
    return 1;
}
