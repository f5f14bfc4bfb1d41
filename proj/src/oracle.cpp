#include "tanner/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tanner {

namespace {
constexpr int kEdgeTraceDimensionCap = 2000;
}

DirectedEdgeMatrix build_edge_matrix(const TannerGraph& g) {
    const int E = static_cast<int>(g.edges.size());
    // incident undirected edge ids per node
    std::vector<std::vector<int>> inc(g.node_count());
    for (int t = 0; t < E; ++t) {
        inc[g.edges[t].check].push_back(t);
        inc[g.num_checks + g.edges[t].var].push_back(t);
    }

    DirectedEdgeMatrix ae;
    ae.num_edges = E;
    ae.succ.resize(2 * E);
    for (int t = 0; t < E; ++t) {
        int c = g.edges[t].check;
        int v = g.num_checks + g.edges[t].var;
        // 2t: c -> v, continues v -> c2 (id 2t2+1), c2 != c
        for (int t2 : inc[v])
            if (t2 != t) ae.succ[2 * t].push_back(2 * t2 + 1);
        // 2t+1: v -> c, continues c -> v2 (id 2t2), v2 != v
        for (int t2 : inc[c])
            if (t2 != t) ae.succ[2 * t + 1].push_back(2 * t2);
    }
    return ae;
}

namespace {

std::vector<Int> edge_traces_core(const DirectedEdgeMatrix& ae, int max_power,
                                  bool parallel) {
    const int D = ae.dimension();
    if (D > kEdgeTraceDimensionCap)
        throw Error(errc::budget_exceeded,
                    "edge matrix dimension " + std::to_string(D) +
                        " exceeds the trace budget");
    const int nthreads = parallel ? thread_count() : 1;
    std::vector<std::vector<long long>> partial(
        nthreads, std::vector<long long>(max_power + 1, 0));

#pragma omp parallel num_threads(nthreads) if (parallel)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        std::vector<long long> cur(D), next(D);
#pragma omp for schedule(static)
        for (int e = 0; e < D; ++e) {
            std::fill(cur.begin(), cur.end(), 0LL);
            cur[e] = 1;
            for (int p = 1; p <= max_power; ++p) {
                std::fill(next.begin(), next.end(), 0LL);
                for (int f = 0; f < D; ++f) {
                    if (!cur[f]) continue;
                    for (int f2 : ae.succ[f]) next[f2] += cur[f];
                }
                std::swap(cur, next);
                partial[tid][p] += cur[e];
            }
        }
    }

    std::vector<Int> traces(max_power + 1, Int(0));
    for (int p = 1; p <= max_power; ++p)
        for (int t = 0; t < nthreads; ++t)
            traces[p] += static_cast<long>(partial[t][p]);
    return traces;
}

}  // namespace

std::vector<Int> edge_power_traces(const DirectedEdgeMatrix& ae, int max_power) {
    return edge_traces_core(ae, max_power, true);
}

namespace reference {
std::vector<Int> edge_power_traces(const DirectedEdgeMatrix& ae, int max_power) {
    return edge_traces_core(ae, max_power, false);
}
}  // namespace reference

std::map<int, Int> count_from_edge_spectrum(const DirectedEdgeMatrix& ae,
                                            int Kmax, int girth) {
    auto traces = edge_power_traces(ae, 2 * Kmax);
    std::map<int, Int> counts;
    for (int k = 1; k <= Kmax; ++k) {
        if (girth != kInfiniteGirth && 2 * k >= 2 * girth) break;
        Int t = traces[2 * k];
        if (t % (4 * k) != 0)
            throw Error(errc::non_integer_count,
                        "Tr(A_e^" + std::to_string(2 * k) +
                            ") not divisible by 4k");
        counts[k] = t / (4 * k);
    }
    return counts;
}

namespace {

struct DfsState {
    const TannerGraph* g;
    int Lmax;
    std::vector<char> in_path;
    std::vector<int> path;
    std::vector<int> dist;  // BFS distance to the anchor
    std::vector<long long> counts;
    long long expansions = 0;
    long long budget = 0;
    std::atomic<bool>* aborted;
};

void dfs_visit(DfsState& st, int u) {
    if (st.aborted->load(std::memory_order_relaxed)) return;
    if (++st.expansions > st.budget) {
        st.aborted->store(true, std::memory_order_relaxed);
        return;
    }
    const int anchor = st.path.front();
    const int len = static_cast<int>(st.path.size());  // edges used = len-1
    for (int v : st.g->adj[u]) {
        if (v == anchor && len >= 3) {
            // canonical direction: second node smaller than last
            if (st.path[1] < st.path.back()) ++st.counts[len];
            continue;
        }
        if (v <= anchor || st.in_path[v]) continue;
        if (len + st.dist[v] > st.Lmax) continue;  // cannot close in time
        st.in_path[v] = 1;
        st.path.push_back(v);
        dfs_visit(st, v);
        st.path.pop_back();
        st.in_path[v] = 0;
    }
}

std::map<int, Int> dfs_core(const TannerGraph& g, int Lmax, long long budget,
                            bool parallel) {
    const int V = g.node_count();
    std::atomic<bool> aborted{false};
    const int nthreads = parallel ? thread_count() : 1;
    std::vector<std::vector<long long>> partial(
        nthreads, std::vector<long long>(Lmax + 2, 0));
    long long per_thread_budget = budget / std::max(1, nthreads);

#pragma omp parallel num_threads(nthreads) if (parallel)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        DfsState st;
        st.g = &g;
        st.Lmax = Lmax;
        st.in_path.assign(V, 0);
        st.counts.assign(Lmax + 2, 0);
        st.budget = per_thread_budget;
        st.aborted = &aborted;
#pragma omp for schedule(dynamic)
        for (int anchor = 0; anchor < V; ++anchor) {
            if (aborted.load(std::memory_order_relaxed)) continue;
            // distances to the anchor within the allowed node set
            st.dist.assign(V, Lmax + 1);
            st.dist[anchor] = 0;
            std::queue<int> q;
            q.push(anchor);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                if (st.dist[u] >= Lmax) continue;
                for (int v : g.adj[u])
                    if (v >= anchor && st.dist[v] > st.dist[u] + 1) {
                        st.dist[v] = st.dist[u] + 1;
                        q.push(v);
                    }
            }
            st.path = {anchor};
            st.in_path[anchor] = 1;
            dfs_visit(st, anchor);
            st.in_path[anchor] = 0;
        }
        for (int l = 0; l <= Lmax + 1; ++l) partial[tid][l] += st.counts[l];
    }

    if (aborted.load())
        throw Error(errc::budget_exceeded, "DFS node-expansion budget exhausted");

    std::map<int, Int> out;
    for (int l = 4; l <= Lmax; l += 2) {
        Int total = 0;
        for (int t = 0; t < nthreads; ++t)
            total += static_cast<long>(partial[t][l]);
        out[l] = total;
    }
    return out;
}

}  // namespace

std::map<int, Int> dfs_cycle_count(const TannerGraph& g, int Lmax,
                                   long long budget) {
    return dfs_core(g, Lmax, budget, true);
}

namespace reference {
std::map<int, Int> dfs_cycle_count(const TannerGraph& g, int Lmax,
                                   long long budget) {
    return dfs_core(g, Lmax, budget, false);
}
}  // namespace reference

std::complex<double> EdgeSpectrumPrediction::power_sum(int two_k) const {
    std::complex<double> acc(0);
    for (const auto& e : entries)
        acc += static_cast<double>(e.multiplicity) *
               std::pow(e.value, static_cast<double>(two_k));
    return acc;
}

EdgeSpectrumPrediction predict_edge_spectrum(
    const BiregularProfile& profile,
    const std::vector<std::pair<double, long>>& gram_eigs) {
    const double s = static_cast<double>(profile.q1 + profile.q2);
    const double p = static_cast<double>(profile.q1) * profile.q2;
    EdgeSpectrumPrediction pred;

    // Step 1: the strictly negative adjacency eigenvalues -sqrt(theta)
    for (auto [theta, mult] : gram_eigs) {
        double alpha = theta - s;
        std::complex<double> disc =
            std::sqrt(std::complex<double>(alpha * alpha - 4.0 * p));
        for (int sign = 0; sign < 2; ++sign) {
            std::complex<double> xi =
                (std::complex<double>(alpha) + (sign ? -disc : disc)) / 2.0;
            if (std::abs(xi - 1.0) <= 1e-6 * std::max(1.0, std::abs(xi)))
                continue;  // "for each solution xi != 1"
            std::complex<double> r = std::sqrt(xi);
            pred.entries.push_back({r, mult, 1});
            pred.entries.push_back({-r, mult, 1});
            pred.step_total[1] += 2 * mult;
        }
    }

    // Step 2: +-sqrt(-q1) and +-sqrt(-q2)
    const long mu = profile.rank;
    std::complex<double> sq1(0.0, std::sqrt(static_cast<double>(profile.q1)));
    std::complex<double> sq2(0.0, std::sqrt(static_cast<double>(profile.q2)));
    for (auto [val, mult] :
         {std::pair{sq1, profile.n - mu}, {-sq1, profile.n - mu},
          {sq2, profile.m - mu}, {-sq2, profile.m - mu}}) {
        pred.entries.push_back({val, mult, 2});
        pred.step_total[2] += mult;
    }

    // Step 3: +-1
    long m3 = profile.edge_count - (profile.m + profile.n) + 1;
    pred.entries.push_back({{1.0, 0.0}, m3, 3});
    pred.entries.push_back({{-1.0, 0.0}, m3, 3});
    pred.step_total[3] = 2 * m3;

    long nullity = profile.m + profile.n - 2 * mu;
    if (pred.step_total[1] != 2 * (profile.m + profile.n) - 2 * nullity - 2 ||
        pred.step_total[2] != 2 * nullity ||
        pred.total_multiplicity() != 2 * profile.edge_count)
        throw Error(errc::multiplicity_mismatch,
                    "predicted step multiplicities do not sum to 2|E|");
    return pred;
}

std::vector<std::pair<double, long>> clustered_gram_spectrum(
    const ScalarParityMatrix& H, const BiregularProfile& profile) {
    const int m = H.m;
    std::vector<cd> G(static_cast<std::size_t>(m) * m, cd(0));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            std::size_t i = 0, j = 0;
            int v = 0;
            while (i < H.rows[r].size() && j < H.rows[c].size()) {
                if (H.rows[r][i] < H.rows[c][j])
                    ++i;
                else if (H.rows[r][i] > H.rows[c][j])
                    ++j;
                else
                    ++v, ++i, ++j;
            }
            G[static_cast<std::size_t>(r) * m + c] = static_cast<double>(v);
        }
    auto eig = hermitian_eigenvalues(std::move(G), m);

    const double lambda_max =
        static_cast<double>((profile.q1 + 1) * (profile.q2 + 1));
    const double tol = 1e-6 * lambda_max;
    std::vector<std::pair<double, long>> clusters;
    for (double v : eig) {
        if (std::abs(v) <= tol) continue;  // zero eigenvalues excluded
        if (!clusters.empty() && std::abs(clusters.back().first - v) <= tol) {
            auto& [cv, cm] = clusters.back();
            cv = (cv * cm + v) / (cm + 1);
            ++cm;
        } else {
            clusters.push_back({v, 1});
        }
    }
    return clusters;
}

VerificationReport verify_methods(const ScalarParityMatrix& H,
                                  const VerificationOptions& opt) {
    auto profile = validate_biregular(H);
    auto g = build_tanner_graph(H);
    VerificationReport rep;
    rep.girth = bfs_girth(g);
    rep.certified_k = std::min(opt.Kmax, rep.girth == kInfiniteGirth
                                             ? opt.Kmax
                                             : rep.girth - 1);

    auto T = gram_power_traces(H, opt.Kmax);
    auto E = shifted_moments(T, profile);

    // formula routes are only compared (and only guaranteed integral)
    // up to the certified range
    rep.methods["recursive"] =
        count_recursive(profile, E, rep.certified_k).counts;
    if (rep.certified_k <= 7)
        rep.methods["ek"] = count_via_ek(profile, E, rep.certified_k).counts;
    int lk = std::min({opt.Kmax, 7, lambda_k_limit(rep.girth)});
    if (lk >= 2)
        rep.methods["lambda"] =
            count_via_lambda(profile, T, rep.girth, lk).counts;

    DirectedEdgeMatrix ae;
    if (opt.run_edge || opt.run_theorem2) ae = build_edge_matrix(g);
    if (opt.run_edge)
        rep.methods["edge_trace"] =
            count_from_edge_spectrum(ae, opt.Kmax, rep.girth);
    if (opt.run_dfs) {
        try {
            auto counts = dfs_cycle_count(g, 2 * rep.certified_k,
                                          opt.dfs_node_budget);
            std::map<int, Int> by_k;
            for (auto& [len, c] : counts) by_k[len / 2] = c;
            rep.methods["dfs"] = std::move(by_k);
        } catch (const Error& e) {
            if (e.code() != errc::budget_exceeded) throw;
            rep.dfs_skipped = true;
        }
    }

    // exact agreement over the certified range
    const auto& base = rep.methods.at("recursive");
    for (auto& [name, counts] : rep.methods) {
        for (int k = 1; k <= rep.certified_k; ++k) {
            auto it = counts.find(k);
            if (it == counts.end()) continue;  // method does not cover this k
            if (it->second != base.at(k)) {
                rep.agree = false;
                rep.disagreements.push_back(
                    name + " N_" + std::to_string(2 * k) + " = " +
                    it->second.get_str() + " vs recursive " +
                    base.at(k).get_str());
            }
        }
    }

    if (opt.run_theorem2) {
        auto spectrum = clustered_gram_spectrum(H, profile);
        auto pred = predict_edge_spectrum(profile, spectrum);
        auto traces = edge_power_traces(ae, 2 * std::min(opt.Kmax, 7));
        rep.theorem2_checked = true;
        for (int k = 1; k <= std::min(opt.Kmax, 7); ++k) {
            double predicted = pred.power_sum(2 * k).real();
            double exact = traces[2 * k].get_d();
            double rel = std::abs(predicted - exact) / std::max(1.0, std::abs(exact));
            rep.theorem2_max_rel_err = std::max(rep.theorem2_max_rel_err, rel);
            if (rel > 1e-6) {
                rep.agree = false;
                rep.disagreements.push_back(
                    "theorem2 power sum 2k=" + std::to_string(2 * k) +
                    " off by relative " + std::to_string(rel));
            }
        }
    }
    return rep;
}

}  // namespace tanner
