#include "tanner/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace tanner {

ScalarParityMatrix::ScalarParityMatrix(int m_, int n_,
                                       std::vector<std::vector<int>> rows_)
    : m(m_), n(n_), rows(std::move(rows_)) {
    if (m < 0 || n < 0 || static_cast<int>(rows.size()) != m)
        throw Error(errc::parse_error, "ScalarParityMatrix: bad shape");
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0 || r[i] >= n)
                throw Error(errc::parse_error,
                            "ScalarParityMatrix: column index out of range");
            if (i > 0 && r[i] == r[i - 1])
                throw Error(errc::parse_error,
                            "ScalarParityMatrix: duplicate column index in row");
        }
    }
}

std::vector<int> ScalarParityMatrix::row_weights() const {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = static_cast<int>(rows[i].size());
    return w;
}

std::vector<int> ScalarParityMatrix::col_weights() const {
    std::vector<int> w(n, 0);
    for (const auto& r : rows)
        for (int c : r) ++w[c];
    return w;
}

long long ScalarParityMatrix::ones() const {
    long long s = 0;
    for (const auto& r : rows) s += static_cast<long long>(r.size());
    return s;
}

PolynomialParityMatrix::PolynomialParityMatrix(
    int n_c_, int n_v_, int N_,
    std::vector<std::vector<std::vector<int>>> entries_)
    : n_c(n_c_), n_v(n_v_), N(N_), entries(std::move(entries_)) {
    if (n_c < 1 || n_v < 1 || N < 1 ||
        static_cast<int>(entries.size()) != n_c)
        throw Error(errc::parse_error, "PolynomialParityMatrix: bad shape");
    for (auto& row : entries) {
        if (static_cast<int>(row.size()) != n_v)
            throw Error(errc::parse_error, "PolynomialParityMatrix: bad shape");
        for (auto& cell : row) {
            std::sort(cell.begin(), cell.end());
            for (std::size_t i = 0; i < cell.size(); ++i) {
                if (cell[i] < 0 || cell[i] >= N)
                    throw Error(errc::exponent_out_of_range,
                                "PolynomialParityMatrix: exponent outside [0, N)");
                if (i > 0 && cell[i] == cell[i - 1])
                    throw Error(errc::parse_error,
                                "PolynomialParityMatrix: duplicate exponent");
            }
        }
    }
}

bool PolynomialParityMatrix::all_monomial() const {
    for (const auto& row : entries)
        for (const auto& cell : row)
            if (cell.size() != 1) return false;
    return true;
}

ScalarParityMatrix expand_qc(const PolynomialParityMatrix& pm) {
    const int N = pm.N;
    std::vector<std::vector<int>> rows(
        static_cast<std::size_t>(pm.n_c) * N);
    for (int bi = 0; bi < pm.n_c; ++bi) {
        for (int bj = 0; bj < pm.n_v; ++bj) {
            for (int e : pm.entries[bi][bj]) {
                // P_e: identity with rows shifted cyclically left by e,
                // i.e. row r has its 1 in column (r + e) mod N.
                for (int r = 0; r < N; ++r)
                    rows[static_cast<std::size_t>(bi) * N + r].push_back(
                        bj * N + (r + e) % N);
            }
        }
    }
    return {pm.n_c * N, pm.n_v * N, std::move(rows)};
}

ScalarParityMatrix reorder_to_block_circulant(const PolynomialParityMatrix& pm) {
    const int N = pm.N;
    // H_l has a 1 at (i, j) iff exponent l appears in entry (i, j);
    // block (r, c) of the N x N block grid is H_{(r - c) mod N}.
    std::vector<std::vector<int>> rows(
        static_cast<std::size_t>(pm.n_c) * N);
    for (int bi = 0; bi < pm.n_c; ++bi) {
        for (int bj = 0; bj < pm.n_v; ++bj) {
            for (int e : pm.entries[bi][bj]) {
                for (int r = 0; r < N; ++r) {
                    int c = (r - e % N + N) % N;  // (r - c) mod N == e
                    rows[static_cast<std::size_t>(r) * pm.n_c + bi].push_back(
                        c * pm.n_v + bj);
                }
            }
        }
    }
    return {pm.n_c * N, pm.n_v * N, std::move(rows)};
}

// Defined in spectral.cpp; declared here to avoid a header cycle.
long exact_rank(const ScalarParityMatrix& H);

BiregularProfile validate_biregular(const ScalarParityMatrix& H) {
    if (H.m == 0 || H.n == 0)
        throw Error(errc::not_biregular, "empty matrix");
    auto rw = H.row_weights();
    auto cw = H.col_weights();
    for (int w : rw)
        if (w != rw[0])
            throw Error(errc::not_biregular, "check-node degrees differ");
    for (int w : cw)
        if (w != cw[0])
            throw Error(errc::not_biregular, "variable-node degrees differ");

    BiregularProfile p;
    p.q1 = cw[0] - 1;
    p.q2 = rw[0] - 1;
    p.m = H.m;
    p.n = H.n;
    p.edge_count = H.ones();
    if (p.q1 < 1 || p.q2 < 2)
        throw Error(errc::degree_too_small,
                    "need variable degree >= 2 and check degree >= 3");
    if (p.edge_count != p.n * (p.q1 + 1) || p.edge_count != p.m * (p.q2 + 1))
        throw Error(errc::not_biregular, "edge count identity violated");

    p.connected = is_connected(build_tanner_graph(H));
    if (!p.connected)
        throw Error(errc::disconnected, "Tanner graph is disconnected");

    p.rank = exact_rank(H);
    if (p.rank <= 0 || p.rank > std::min(p.m, p.n))
        throw Error(errc::not_biregular, "rank outside (0, min(m, n)]");
    return p;
}

TannerGraph build_tanner_graph(const ScalarParityMatrix& H) {
    TannerGraph g;
    g.num_checks = H.m;
    g.num_vars = H.n;
    g.adj.assign(g.node_count(), {});
    for (int i = 0; i < H.m; ++i) {
        for (int c : H.rows[i]) {
            g.edges.push_back({i, c});
            g.adj[i].push_back(H.m + c);
            g.adj[H.m + c].push_back(i);
        }
    }
    return g;
}

bool is_connected(const TannerGraph& g) {
    return connected_components(g).size() == 1;
}

std::vector<std::vector<int>> connected_components(const TannerGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.node_count(), 0);
    for (int s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

ScalarParityMatrix submatrix_for_component(const ScalarParityMatrix& H,
                                           const std::vector<int>& component) {
    std::vector<int> row_map(H.m, -1), col_map(H.n, -1);
    int mr = 0, nc = 0;
    for (int node : component) {
        if (node < H.m)
            row_map[node] = mr++;
        else
            col_map[node - H.m] = nc++;
    }
    std::vector<std::vector<int>> rows(mr);
    for (int i = 0; i < H.m; ++i) {
        if (row_map[i] < 0) continue;
        for (int c : H.rows[i]) {
            if (col_map[c] < 0)
                throw Error(errc::disconnected,
                            "component does not close over its edges");
            rows[row_map[i]].push_back(col_map[c]);
        }
    }
    return {mr, nc, std::move(rows)};
}

int bfs_girth(const TannerGraph& g) {
    int best = kInfiniteGirth;
    const int V = g.node_count();
    std::vector<int> dist(V), parent(V);
    for (int s = 0; s < V; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            for (int v : g.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

MonomialFixture generate_monomial_fixture(int n, std::span<const int> exponents) {
    if (n < 3 || n % 2 == 0)
        throw Error(errc::parse_error, "monomial fixture needs odd n >= 3");
    if (static_cast<int>(exponents.size()) != n - 1)
        throw Error(errc::parse_error, "need exactly n-1 exponents");

    std::vector<std::vector<std::vector<int>>> entries(
        3, std::vector<std::vector<int>>(n));
    for (int j = 0; j < n; ++j) {
        entries[0][j] = {0};
        entries[1][j] = {j};
        entries[2][j] = {j == 0 ? 0 : ((exponents[j - 1] % n) + n) % n};
    }

    std::set<int> full;
    for (int v = 1; v < n; ++v) full.insert(v);
    std::set<int> given, shifted;
    for (int j = 1; j < n; ++j) {
        int i = entries[2][j][0];
        given.insert(i);
        shifted.insert(((j - i) % n + n) % n);
    }

    MonomialFixture fx;
    fx.pm = PolynomialParityMatrix(3, n, n, std::move(entries));
    fx.condition_holds = (given == full && shifted == full);
    return fx;
}

}  // namespace tanner
