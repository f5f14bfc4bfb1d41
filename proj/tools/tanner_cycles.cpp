#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tanner/analyze.hpp"
#include "tanner/fixtures.hpp"
#include "tanner/formats.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw tanner::Error(tanner::errc::parse_error,
                            "cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

tanner::InputFormat guess_format(const std::string& path,
                                 const std::string& tag) {
    if (!tag.empty()) return tanner::parse_format_tag(tag);
    if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".alist") == 0)
        return tanner::InputFormat::alist;
    return tanner::InputFormat::expmat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle counting for bi-regular bipartite Tanner graphs"};
    app.require_subcommand(1);

    std::string file, format_tag, method_tag = "auto", verify_tag, example;
    int kmax = 7;
    bool json_out = false, allow_disc = false, paranoid = false;

    auto* analyze = app.add_subcommand(
        "analyze", "Count even cycles N_4..N_{2K} with a girth certificate");
    analyze->add_option("file", file, "alist or exponent-matrix file")
        ->required();
    analyze->add_option("--format", format_tag, "alist or expmat")
        ->check(CLI::IsMember({"alist", "expmat"}));
    analyze->add_option("--method", method_tag,
                        "auto, recursive, ek, lambda, or all")
        ->check(CLI::IsMember({"auto", "recursive", "ek", "lambda", "all"}));
    analyze->add_option("--kmax", kmax, "largest half-length k (default 7)");
    analyze->add_option("--verify", verify_tag,
                        "comma list of independent checks: dfs,edge,thm2");
    analyze->add_flag("--json", json_out, "machine-readable report");
    analyze->add_flag("--allow-disconnected", allow_disc,
                      "analyze components separately and sum");
    analyze->add_flag("--paranoid", paranoid,
                      "cross-check the QC fast path against the scalar path");

    auto* spectrum = app.add_subcommand(
        "spectrum", "Per-block characteristic polynomials of a QC matrix");
    spectrum->add_option("file", file, "exponent-matrix file")->required();
    spectrum->add_flag("--json", json_out, "machine-readable report");

    auto* girth = app.add_subcommand("girth", "Girth by BFS plus certificate");
    girth->add_option("file", file, "alist or exponent-matrix file")->required();
    girth->add_option("--format", format_tag, "alist or expmat")
        ->check(CLI::IsMember({"alist", "expmat"}));
    girth->add_flag("--json", json_out, "machine-readable report");

    auto* fixtures =
        app.add_subcommand("fixtures", "Emit a built-in example matrix");
    fixtures
        ->add_option("--example", example,
                     "tanner (the [155,91] code) or monomial:n=<odd>")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze || *girth) {
            tanner::AnalysisRequest req;
            req.text = slurp(file);
            req.format = guess_format(file, format_tag);
            req.method = tanner::parse_method_tag(method_tag);
            req.kmax = kmax;
            req.json_output = json_out;
            req.allow_disconnected = allow_disc;
            req.paranoid = paranoid;
            if (*girth) {
                req.method = tanner::MethodChoice::recursive;
                req.kmax = 7;
            }
            std::stringstream vs(verify_tag);
            std::string item;
            while (std::getline(vs, item, ',')) {
                if (item == "dfs")
                    req.verify_dfs = true;
                else if (item == "edge")
                    req.verify_edge = true;
                else if (item == "thm2")
                    req.verify_theorem2 = true;
                else if (!item.empty())
                    throw tanner::Error(tanner::errc::parse_error,
                                        "unknown verify leg \"" + item + "\"");
            }
            auto res = tanner::run_analyze(req);
            if (*girth) {
                if (json_out) {
                    tanner::ojson gj;
                    gj["schema_version"] = res.report["schema_version"];
                    gj["girth"] = res.report["girth"];
                    std::cout << gj.dump(2) << "\n";
                } else {
                    const auto& g = res.report["girth"];
                    if (g["bfs"].is_null())
                        std::cout << "girth: infinite (forest)\n";
                    else
                        std::cout << "girth: " << g["bfs"].get<int>() << "\n";
                    std::cout << "certified lower bound: "
                              << g["certified_lower_bound"].get<int>() << "\n";
                }
                return res.exit_code;
            }
            if (json_out)
                std::cout << res.report.dump(2) << "\n";
            else
                std::cout << res.human;
            return res.exit_code;
        }
        if (*spectrum) {
            auto res = tanner::run_spectrum(slurp(file), json_out);
            if (json_out)
                std::cout << res.report.dump(2) << "\n";
            else
                std::cout << res.human;
            return res.exit_code;
        }
        if (*fixtures) {
            if (example == "tanner") {
                std::cout << tanner::write_expmat(tanner::tanner_155_fixture());
            } else if (example.rfind("monomial:n=", 0) == 0) {
                int n = std::stoi(example.substr(11));
                if (n < 5 || n % 2 == 0)
                    throw tanner::Error(tanner::errc::parse_error,
                                        "monomial fixture needs odd n >= 5");
                std::cout << tanner::write_expmat(
                    tanner::monomial_fixture(n).pm);
            } else {
                throw tanner::Error(tanner::errc::parse_error,
                                    "unknown example \"" + example + "\"");
            }
            return 0;
        }
    } catch (const tanner::Error& e) {
        std::cerr << "error (" << e.code_name() << "): " << e.what() << "\n";
        return e.code() == tanner::errc::disagreement ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
