#ifndef TANNER_MATRIX_HPP
#define TANNER_MATRIX_HPP

#include <span>
#include <vector>

#include "tanner/common.hpp"

namespace tanner {

/// Sparse 0/1 parity-check matrix: m check rows by n variable columns.
/// Each row holds the sorted column indices of its 1-entries.
struct ScalarParityMatrix {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> rows;

    ScalarParityMatrix() = default;
    ScalarParityMatrix(int m_, int n_, std::vector<std::vector<int>> rows_);

    std::vector<int> row_weights() const;
    std::vector<int> col_weights() const;
    long long ones() const;

    bool operator==(const ScalarParityMatrix&) const = default;
};

/// Polynomial parity-check matrix over x^N - 1 with binary coefficients:
/// each entry is a set of distinct exponents in [0, N). Empty set = zero.
struct PolynomialParityMatrix {
    int n_c = 0;
    int n_v = 0;
    int N = 1;
    std::vector<std::vector<std::vector<int>>> entries;  // [n_c][n_v] exponent sets

    PolynomialParityMatrix() = default;
    PolynomialParityMatrix(int n_c_, int n_v_, int N_,
                           std::vector<std::vector<std::vector<int>>> entries_);

    bool all_monomial() const;

    bool operator==(const PolynomialParityMatrix&) const = default;
};

/// Scalar invariants of a connected bi-regular Tanner graph:
/// variable degree q1+1, check degree q2+1, |E|, and rank mu of H.
struct BiregularProfile {
    long q1 = 0;
    long q2 = 0;
    long m = 0;
    long n = 0;
    long edge_count = 0;
    long rank = 0;
    bool connected = false;
};

/// Bipartite graph of a parity-check matrix. Nodes 0..m-1 are checks,
/// m..m+n-1 are variables. Edge ids follow row-major order over 1-entries.
struct TannerGraph {
    int num_checks = 0;
    int num_vars = 0;

    struct Edge {
        int check;  // row index
        int var;    // column index
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;  // neighbor node ids, size m+n

    int node_count() const { return num_checks + num_vars; }
};

ScalarParityMatrix expand_qc(const PolynomialParityMatrix& pm);
ScalarParityMatrix reorder_to_block_circulant(const PolynomialParityMatrix& pm);

BiregularProfile validate_biregular(const ScalarParityMatrix& H);

TannerGraph build_tanner_graph(const ScalarParityMatrix& H);

bool is_connected(const TannerGraph& g);

/// Partition of node ids into connected components.
std::vector<std::vector<int>> connected_components(const TannerGraph& g);

/// Restriction of H to one connected component (given as node ids of the
/// Tanner graph); columns/rows are renumbered in ascending order.
ScalarParityMatrix submatrix_for_component(const ScalarParityMatrix& H,
                                           const std::vector<int>& component);

/// Length of the shortest cycle, kInfiniteGirth for a forest.
/// Even for any bipartite graph.
int bfs_girth(const TannerGraph& g);

/// 3 x n monomial matrix [[1..1],[1,x,..,x^{n-1}],[1,x^{i_1},..,x^{i_{n-1}}]]
/// mod x^n - 1, with a check of the exponent condition
/// {i_j} = {j - i_j mod n} = {1..n-1} under which girth 6 is achieved.
struct MonomialFixture {
    PolynomialParityMatrix pm;
    bool condition_holds = false;
};

MonomialFixture generate_monomial_fixture(int n, std::span<const int> exponents);

}  // namespace tanner

#endif
