#ifndef TANNER_ORACLE_HPP
#define TANNER_ORACLE_HPP

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "tanner/common.hpp"
#include "tanner/cycle_formulas.hpp"
#include "tanner/matrix.hpp"
#include "tanner/spectral.hpp"

namespace tanner {

/// Non-backtracking successor structure on directed edges. Directed edge
/// 2t is check->var for undirected edge t, 2t+1 is var->check; (u->v)
/// connects to (v->w) iff w != u.
struct DirectedEdgeMatrix {
    int num_edges = 0;  // undirected |E|; dimension is 2|E|
    std::vector<std::vector<int>> succ;

    int dimension() const { return 2 * num_edges; }
};

DirectedEdgeMatrix build_edge_matrix(const TannerGraph& g);

/// Exact Tr(A_e^p) for p = 1..max_power by repeated sparse application.
std::vector<Int> edge_power_traces(const DirectedEdgeMatrix& ae, int max_power);

namespace reference {
std::vector<Int> edge_power_traces(const DirectedEdgeMatrix& ae, int max_power);
}  // namespace reference

/// N_{2k} = Tr(A_e^{2k}) / 4k for all even lengths 2k <= 2*Kmax with
/// 2k < 2*girth (the validity bound of the trace identity).
std::map<int, Int> count_from_edge_spectrum(const DirectedEdgeMatrix& ae,
                                            int Kmax, int girth);

/// Exact simple-cycle counts per even length <= Lmax by anchored DFS;
/// cycles are canonicalized by (smallest node, direction).
std::map<int, Int> dfs_cycle_count(const TannerGraph& g, int Lmax,
                                   long long budget = dfs_budget());

namespace reference {
std::map<int, Int> dfs_cycle_count(const TannerGraph& g, int Lmax,
                                   long long budget = dfs_budget());
}  // namespace reference

/// Edge spectrum predicted from the adjacency spectrum: step 1 maps each
/// Gram eigenvalue through xi^2 - alpha xi + q1 q2 = 0, steps 2 and 3 add
/// the fixed +-sqrt(-q1), +-sqrt(-q2), +-1 families.
struct EdgeSpectrumPrediction {
    struct Entry {
        std::complex<double> value;
        long multiplicity;
        int step;  // 1, 2, or 3
    };
    std::vector<Entry> entries;
    long step_total[4] = {0, 0, 0, 0};  // step_total[1..3]

    long total_multiplicity() const {
        return step_total[1] + step_total[2] + step_total[3];
    }
    /// sum of eta^{2k} over the predicted multiset (real up to roundoff)
    std::complex<double> power_sum(int two_k) const;
};

/// `gram_eigs`: clustered (eigenvalue, multiplicity) pairs of HH^T,
/// nonzero eigenvalues only.
EdgeSpectrumPrediction predict_edge_spectrum(
    const BiregularProfile& profile,
    const std::vector<std::pair<double, long>>& gram_eigs);

/// Numeric HH^T spectrum clustered at tolerance 1e-6 * lambda_max.
std::vector<std::pair<double, long>> clustered_gram_spectrum(
    const ScalarParityMatrix& H, const BiregularProfile& profile);

/// Cross-check of every applicable counting route.
struct VerificationOptions {
    int Kmax = 7;
    bool run_dfs = true;
    bool run_edge = true;
    bool run_theorem2 = true;
    long long dfs_node_budget = dfs_budget();
};

struct VerificationReport {
    int girth = 0;
    int certified_k = 0;  // counts compared for k <= min(Kmax, girth-1)
    // per-method counts keyed by method label then k
    std::map<std::string, std::map<int, Int>> methods;
    bool dfs_skipped = false;  // over budget
    bool agree = true;
    std::vector<std::string> disagreements;
    bool theorem2_checked = false;
    double theorem2_max_rel_err = 0.0;
};

VerificationReport verify_methods(const ScalarParityMatrix& H,
                                  const VerificationOptions& opt = {});

}  // namespace tanner

#endif
