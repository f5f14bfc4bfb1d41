#include "tanner/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tanner/cycle_formulas.hpp"
#include "tanner/formats.hpp"
#include "tanner/oracle.hpp"
#include "tanner/spectral.hpp"

namespace tanner {

InputFormat parse_format_tag(const std::string& tag) {
    if (tag == "alist") return InputFormat::alist;
    if (tag == "expmat") return InputFormat::expmat;
    throw Error(errc::parse_error, "unknown input format \"" + tag + "\"");
}

MethodChoice parse_method_tag(const std::string& tag) {
    if (tag == "auto") return MethodChoice::automatic;
    if (tag == "recursive") return MethodChoice::recursive;
    if (tag == "ek") return MethodChoice::ek;
    if (tag == "lambda") return MethodChoice::lambda;
    if (tag == "all") return MethodChoice::all;
    throw Error(errc::parse_error, "unknown method \"" + tag + "\"");
}

namespace {

struct ComponentResult {
    BiregularProfile profile;
    int girth = 0;
    PowerSumTable traces;
    GirthCertificate cert;
    // method label -> (k -> N_2k)
    std::map<std::string, std::map<int, Int>> methods;
    bool dfs_skipped = false;
    bool theorem2_checked = false;
    double theorem2_max_rel_err = 0.0;
};

// Beyond k = girth - 1 the formula numerators may stop being divisible by
// 2k (the trace identity no longer counts simple cycles alone). Retry with
// a smaller K and warn rather than fail the whole run.
template <class Fn>
std::map<int, Int> counts_with_fallback(Fn&& fn, int K, int valid_k,
                                        const char* label,
                                        std::vector<std::string>& warnings) {
    for (int kk = K; kk >= 2; --kk) {
        try {
            return fn(kk);
        } catch (const Error& e) {
            if (e.code() != errc::non_integer_count || kk <= valid_k) throw;
            if (kk == K)
                warnings.push_back(
                    std::string(label) +
                    ": advisory values past the certified range are not "
                    "integral here and were dropped");
        }
    }
    return {};
}

ComponentResult analyze_component(const ScalarParityMatrix& H,
                                  const PolynomialParityMatrix* pm,
                                  const AnalysisRequest& req,
                                  std::vector<std::string>& warnings) {
    ComponentResult out;
    out.profile = validate_biregular(H);
    auto graph = build_tanner_graph(H);
    out.girth = bfs_girth(graph);

    if (pm) {
        auto cps = roots_of_unity_charpolys(*pm);
        out.traces = qc_power_traces(cps, req.kmax);
        if (req.paranoid) {
            auto scalar = gram_power_traces(H, req.kmax);
            if (scalar.T != out.traces.T)
                throw Error(errc::disagreement,
                            "QC fast-path traces disagree with the scalar path");
        }
    } else {
        out.traces = gram_power_traces(H, req.kmax);
    }
    auto E = shifted_moments(out.traces, out.profile);
    out.cert = girth_certificate(out.profile, out.traces);

    const int valid_k =
        out.girth == kInfiniteGirth ? req.kmax : std::min(req.kmax, out.girth - 1);
    const int lam_k =
        std::min({req.kmax, 7, lambda_k_limit(out.girth)});
    auto recursive = [&](int K) {
        return count_recursive(out.profile, E, K).counts;
    };
    auto via_ek = [&](int K) { return count_via_ek(out.profile, E, K).counts; };
    switch (req.method) {
        case MethodChoice::recursive:
            out.methods["recursive"] = counts_with_fallback(
                recursive, req.kmax, valid_k, "recursive", warnings);
            break;
        case MethodChoice::ek:
            out.methods["ek"] =
                counts_with_fallback(via_ek, req.kmax, valid_k, "ek", warnings);
            break;
        case MethodChoice::lambda:
            out.methods["lambda"] =
                count_via_lambda(out.profile, out.traces, out.girth, req.kmax)
                    .counts;
            break;
        case MethodChoice::automatic:
            out.methods["recursive"] = counts_with_fallback(
                recursive, req.kmax, valid_k, "recursive", warnings);
            if (lam_k >= 2)
                out.methods["lambda"] =
                    count_via_lambda(out.profile, out.traces, out.girth, lam_k)
                        .counts;
            break;
        case MethodChoice::all:
            out.methods["recursive"] = counts_with_fallback(
                recursive, req.kmax, valid_k, "recursive", warnings);
            out.methods["ek"] = counts_with_fallback(
                via_ek, std::min(req.kmax, 7), valid_k, "ek", warnings);
            if (lam_k >= 2)
                out.methods["lambda"] =
                    count_via_lambda(out.profile, out.traces, out.girth, lam_k)
                        .counts;
            break;
    }

    if (req.verify_edge) {
        auto ae = build_edge_matrix(graph);
        out.methods["edge_trace"] =
            count_from_edge_spectrum(ae, req.kmax, out.girth);
    }
    if (req.verify_dfs) {
        try {
            auto by_len = dfs_cycle_count(graph, 2 * valid_k);
            std::map<int, Int> by_k;
            for (auto& [len, c] : by_len) by_k[len / 2] = c;
            out.methods["dfs"] = std::move(by_k);
        } catch (const Error& e) {
            if (e.code() != errc::budget_exceeded) throw;
            out.dfs_skipped = true;
            warnings.push_back("DFS verification skipped: budget exceeded");
        }
    }
    if (req.verify_theorem2) {
        auto ae = build_edge_matrix(graph);
        auto spectrum = clustered_gram_spectrum(H, out.profile);
        auto pred = predict_edge_spectrum(out.profile, spectrum);
        auto traces = edge_power_traces(ae, 2 * std::min(req.kmax, 7));
        out.theorem2_checked = true;
        for (int k = 1; k <= std::min(req.kmax, 7); ++k) {
            double predicted = pred.power_sum(2 * k).real();
            double exact = traces[2 * k].get_d();
            double rel =
                std::abs(predicted - exact) / std::max(1.0, std::abs(exact));
            out.theorem2_max_rel_err = std::max(out.theorem2_max_rel_err, rel);
        }
    }
    return out;
}

std::string int_str(const Int& v) { return v.get_str(); }

}  // namespace

AnalysisResult run_analyze(const AnalysisRequest& req) {
    AnalysisResult res;
    std::vector<std::string> warnings;

    if (req.kmax < 2) throw Error(errc::parse_error, "Kmax must be >= 2");

    // parse
    ScalarParityMatrix H;
    PolynomialParityMatrix pm;
    bool is_qc = false;
    if (req.format == InputFormat::alist) {
        H = parse_alist(req.text);
    } else {
        pm = parse_expmat(req.text, &warnings);
        H = expand_qc(pm);
        is_qc = true;
    }

    // connectivity handling
    auto graph = build_tanner_graph(H);
    auto comps = connected_components(graph);
    std::vector<ComponentResult> parts;
    if (comps.size() == 1) {
        parts.push_back(analyze_component(H, is_qc ? &pm : nullptr, req, warnings));
    } else {
        if (!req.allow_disconnected)
            throw Error(errc::disconnected,
                        "input graph has " + std::to_string(comps.size()) +
                            " components (use --allow-disconnected for "
                            "per-component analysis)");
        warnings.push_back("disconnected input: analyzed " +
                           std::to_string(comps.size()) +
                           " components separately, totals summed");
        for (const auto& comp : comps)
            parts.push_back(analyze_component(submatrix_for_component(H, comp),
                                              nullptr, req, warnings));
    }

    // aggregate
    long total_edges = 0, total_rank = 0;
    int girth = kInfiniteGirth;
    int certified_lb = kInfiniteGirth;
    for (const auto& p : parts) {
        total_edges += p.profile.edge_count;
        total_rank += p.profile.rank;
        girth = std::min(girth, p.girth);
        certified_lb = std::min(certified_lb, p.cert.certified_girth);
    }

    // methods present in every component are summable
    std::map<std::string, std::map<int, Int>> methods;
    for (const auto& [name, counts] : parts.front().methods) {
        bool everywhere = true;
        for (const auto& p : parts)
            if (!p.methods.count(name)) everywhere = false;
        if (!everywhere) continue;
        std::map<int, Int> sum;
        bool first = true;
        for (const auto& p : parts) {
            const auto& c = p.methods.at(name);
            if (first) {
                sum = c;
                first = false;
            } else {
                // only k covered by every component survives
                for (auto it = sum.begin(); it != sum.end();) {
                    auto jt = c.find(it->first);
                    if (jt == c.end())
                        it = sum.erase(it);
                    else
                        it->second += jt->second, ++it;
                }
            }
        }
        methods[name] = std::move(sum);
    }

    // consensus and agreement
    std::map<int, Int> consensus;
    std::vector<std::string> disagreements;
    for (const auto& [name, counts] : methods) {
        for (const auto& [k, v] : counts) {
            auto it = consensus.find(k);
            if (it == consensus.end())
                consensus[k] = v;
            else if (it->second != v)
                disagreements.push_back("N_" + std::to_string(2 * k) + ": " +
                                        name + " gives " + int_str(v) +
                                        ", expected " + int_str(it->second));
        }
    }
    res.exit_code = disagreements.empty() ? 0 : 2;

    const auto& front = parts.front().profile;
    const int valid_k = girth == kInfiniteGirth ? req.kmax : girth - 1;
    bool advisory_printed = false;

    ojson rj;
    rj["schema_version"] = kReportSchemaVersion;
    rj["tool"] = "tanner-cycles";
    rj["tool_version"] = kToolVersion;
    ojson input;
    input["m"] = H.m;
    input["n"] = H.n;
    input["q1"] = front.q1;
    input["q2"] = front.q2;
    input["edges"] = total_edges;
    input["rank"] = total_rank;
    input["components"] = parts.size();
    if (is_qc) {
        ojson qc;
        qc["n_c"] = pm.n_c;
        qc["n_v"] = pm.n_v;
        qc["N"] = pm.N;
        input["qc"] = qc;
    } else {
        input["qc"] = nullptr;
    }
    rj["input"] = input;

    ojson gj;
    if (girth == kInfiniteGirth)
        gj["bfs"] = nullptr;
    else
        gj["bfs"] = girth;
    gj["certified_lower_bound"] = certified_lb;
    ojson conds = ojson::array();
    for (auto [j, ok] : parts.front().cert.conditions) {
        ojson c;
        c["j"] = j;
        c["holds"] = ok;
        conds.push_back(c);
    }
    gj["conditions"] = conds;
    rj["girth"] = gj;

    ojson counts = ojson::array();
    for (const auto& [k, v] : consensus) {
        ojson e;
        e["two_k"] = 2 * k;
        e["value"] = int_str(v);
        ojson mm;
        for (const auto& [name, mc] : methods) {
            auto it = mc.find(k);
            if (it != mc.end()) mm[name] = int_str(it->second);
        }
        e["methods"] = mm;
        bool certified = (k <= valid_k);
        e["certified"] = certified;
        if (!certified) advisory_printed = true;
        counts.push_back(e);
    }
    rj["counts"] = counts;

    ojson ver;
    bool any_ver = false;
    for (const auto& p : parts) {
        if (p.theorem2_checked) {
            ver["theorem2_max_rel_err"] = p.theorem2_max_rel_err;
            any_ver = true;
        }
        if (p.dfs_skipped) ver["dfs_skipped"] = true;
    }
    if (methods.count("dfs") || methods.count("edge_trace")) any_ver = true;
    rj["verification"] = any_ver ? ver : ojson(nullptr);

    if (advisory_printed)
        warnings.push_back(
            "counts with 2k >= 2*girth are advisory: the trace identities "
            "only isolate simple cycles for k <= girth - 1");
    for (const auto& d : disagreements) warnings.push_back("disagreement: " + d);
    // per-component analysis can emit the same warning repeatedly
    std::vector<std::string> seen;
    std::erase_if(warnings, [&](const std::string& w) {
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) return true;
        seen.push_back(w);
        return false;
    });
    rj["warnings"] = warnings;
    res.report = std::move(rj);

    // human rendering
    std::ostringstream hs;
    hs << "matrix: " << H.m << " x " << H.n << "  (q1=" << front.q1
       << ", q2=" << front.q2 << ", |E|=" << total_edges
       << ", rank=" << total_rank << ")\n";
    hs << "girth: ";
    if (girth == kInfiniteGirth)
        hs << "infinite (forest)";
    else
        hs << girth;
    hs << "  [certified >= " << certified_lb << "]\n";
    for (const auto& [k, v] : consensus) {
        hs << "N_" << 2 * k << " = " << int_str(v);
        if (k > valid_k) hs << "   (advisory)";
        hs << "\n";
    }
    for (const auto& w : warnings)
        if (w.rfind("disagreement:", 0) != 0) hs << "warning: " << w << "\n";
    for (const auto& d : disagreements) hs << "DISAGREEMENT: " << d << "\n";
    res.human = hs.str();
    return res;
}

AnalysisResult run_spectrum(const std::string& expmat_text, bool json_output) {
    AnalysisResult res;
    std::vector<std::string> warnings;
    auto pm = parse_expmat(expmat_text, &warnings);
    auto cps = roots_of_unity_charpolys(pm);

    // group equal blocks (covers conjugate pairs j and N-j)
    auto key_of = [&](const CharPolyBlock& b) {
        std::vector<long long> key;
        for (auto c : b.coeffs) {
            key.push_back(std::llround(c.real() * 1e6));
            key.push_back(std::llround(c.imag() * 1e6));
        }
        return key;
    };
    std::map<std::vector<long long>, std::vector<int>> groups;
    for (const auto& b : cps.blocks) groups[key_of(b)].push_back(b.j);

    ojson rj;
    rj["schema_version"] = kReportSchemaVersion;
    rj["tool"] = "tanner-cycles";
    rj["n_c"] = pm.n_c;
    rj["n_v"] = pm.n_v;
    rj["N"] = pm.N;
    ojson blocks = ojson::array();

    std::ostringstream hs;
    hs << "root-of-unity blocks (N = " << pm.N << ", " << groups.size()
       << " distinct):\n";
    // deterministic order: by smallest j in the group
    std::vector<const std::vector<int>*> order;
    std::map<int, const std::vector<long long>*> by_first;
    for (const auto& [key, js] : groups) by_first[js.front()] = &key;
    for (const auto& [first_j, keyp] : by_first) {
        const auto& js = groups.at(*keyp);
        const auto& blk = cps.blocks[first_j];
        auto eig = hermitian_eigenvalues(root_of_unity_gram(pm, first_j), pm.n_c);

        ojson b;
        b["j"] = js;
        ojson coeffs = ojson::array();
        for (std::size_t i = 0; i < blk.coeffs.size(); ++i) {
            if (blk.snap_ok)
                coeffs.push_back(blk.snapped[i]);
            else {
                ojson c;
                c["re"] = blk.coeffs[i].real();
                c["im"] = blk.coeffs[i].imag();
                coeffs.push_back(c);
            }
        }
        b["charpoly_low_to_high"] = coeffs;
        b["integer_coefficients"] = blk.snap_ok;
        b["eigenvalues"] = eig;
        blocks.push_back(b);

        hs << "  j in {";
        for (std::size_t i = 0; i < js.size(); ++i)
            hs << (i ? "," : "") << js[i];
        hs << "}: charpoly ";
        for (int i = static_cast<int>(blk.coeffs.size()) - 1; i >= 0; --i) {
            if (blk.snap_ok)
                hs << (i == static_cast<int>(blk.coeffs.size()) - 1 ? "" : " + ")
                   << blk.snapped[i] << "*t^" << i;
            else
                hs << (i == static_cast<int>(blk.coeffs.size()) - 1 ? "" : " + ")
                   << blk.coeffs[i].real() << "*t^" << i;
        }
        hs << "; eigenvalues";
        for (double e : eig) hs << ' ' << e;
        hs << "\n";
    }
    rj["blocks"] = blocks;
    rj["warnings"] = warnings;
    res.report = std::move(rj);
    res.human = hs.str();
    res.exit_code = 0;
    (void)json_output;
    return res;
}

}  // namespace tanner
