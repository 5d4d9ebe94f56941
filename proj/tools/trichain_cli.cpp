/*
 * trichain: decompose zero-dimensional regular chains into simple sets,
 * query multiplicities at zeros, isolate real solutions with multiplicity.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trichain/dualspace.hpp"
#include "trichain/sysio.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decomposition of zero-dimensional regular chains into simple sets,\n"
                 "multiplicity queries and real solution isolation with multiplicity"};
    app.require_subcommand(1);

    std::string file, point, width_str = "0";
    bool json = false;
    int threads = 1;
    int oracle_cap = 64;

    auto add_common = [&](CLI::App* sub, bool needs_point) {
        sub->add_option("file", file, "system file")->required();
        sub->add_flag("--json", json, "machine-readable JSON output");
        if (needs_point)
            sub->add_option("--point", point,
                            "comma-separated Gaussian rationals, e.g. 1+1i,0")
                ->required();
        return sub;
    };

    auto* dec = add_common(app.add_subcommand("decompose", "simple-set decomposition with multiplicity arrays"), false);
    auto* mul = add_common(app.add_subcommand("mult", "local multiplicity at a zero"), true);
    auto* iso = add_common(app.add_subcommand("isolate", "real solution isolation with multiplicity"), false);
    iso->add_option("--width", width_str, "refine boxes to at most this width (rational)");
    iso->add_option("--threads", threads, "parallel branch isolation (outputs unchanged)");
    auto* ora = add_common(app.add_subcommand("oracle", "dual-space multiplicity oracle at a rational zero"), true);
    ora->add_option("--cap", oracle_cap, "truncation-order cap (default 64)");
    auto* chk = add_common(app.add_subcommand("check", "validate that the file is a zero-dimensional regular chain"), false);

    CLI11_PARSE(app, argc, argv);

    try {
        trichain::SystemFile sys = trichain::parse_system(slurp(file));
        trichain::RunOptions opt;
        opt.width = trichain::rational_from_string(width_str == "0" ? "0" : width_str);
        opt.threads = threads;
        opt.oracle_cap = oracle_cap;
        if (const char* cap = std::getenv("TRICHAIN_DEPTH_CAP")) opt.depth_cap = std::atoi(cap);

        trichain::ResultDocument doc;
        if (dec->parsed()) doc = trichain::run_decompose(sys, opt);
        else if (mul->parsed()) doc = trichain::run_mult(sys, point, opt);
        else if (iso->parsed()) doc = trichain::run_isolate(sys, opt);
        else if (ora->parsed()) doc = trichain::run_oracle(sys, point, opt);
        else doc = trichain::run_check(sys, opt);

        std::cout << (json ? trichain::document_to_json(doc) + "\n"
                           : trichain::document_to_text(doc));
        if (chk->parsed() && doc.regular && !*doc.regular) return 1;
        return 0;
    } catch (const trichain::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.col << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const trichain::DualSpaceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
