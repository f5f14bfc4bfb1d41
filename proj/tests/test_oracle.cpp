#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tanner/fixtures.hpp"
#include "tanner/oracle.hpp"

using namespace tanner;

namespace {

ScalarParityMatrix k33() {
    return {3, 3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
}

}  // namespace

TEST_CASE("directed edge matrix structure") {
    auto g = build_tanner_graph(k33());
    auto ae = build_edge_matrix(g);
    CHECK(ae.num_edges == 9);
    CHECK(ae.dimension() == 18);
    // out-degree of (u -> v) is deg(v) - 1 = 2 everywhere in K33
    for (const auto& s : ae.succ) CHECK(s.size() == 2);
}

TEST_CASE("edge traces: parallel equals reference, odd traces vanish") {
    auto g = build_tanner_graph(expand_qc(tanner_155_fixture()));
    auto ae = build_edge_matrix(g);
    auto a = edge_power_traces(ae, 14);
    auto b = reference::edge_power_traces(ae, 14);
    CHECK(a == b);
    for (int p = 1; p <= 14; p += 2) CHECK(a[p] == 0);
}

TEST_CASE("edge-spectrum counts on K33") {
    auto g = build_tanner_graph(k33());
    auto counts = count_from_edge_spectrum(build_edge_matrix(g), 7, 4);
    // identity valid for 2k < 2g = 8 only
    CHECK(counts.at(1) == 0);
    CHECK(counts.at(2) == 9);
    CHECK(counts.at(3) == 6);
    CHECK(counts.count(4) == 0);
}

TEST_CASE("DFS enumeration on K33") {
    auto g = build_tanner_graph(k33());
    auto counts = dfs_cycle_count(g, 8);
    CHECK(counts.at(4) == 9);
    CHECK(counts.at(6) == 6);
    CHECK(counts.at(8) == 0);  // only 6 vertices, no 8-cycle exists
    CHECK(reference::dfs_cycle_count(g, 8) == counts);
}

TEST_CASE("DFS budget exhaustion") {
    auto g = build_tanner_graph(expand_qc(tanner_155_fixture()));
    try {
        dfs_cycle_count(g, 14, 100);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
}

TEST_CASE("DFS matches the formulas on the Tanner code") {
    auto H = expand_qc(tanner_155_fixture());
    auto g = build_tanner_graph(H);
    auto counts = dfs_cycle_count(g, 14);
    CHECK(counts.at(4) == 0);
    CHECK(counts.at(6) == 0);
    CHECK(counts.at(8) == 465);
    CHECK(counts.at(10) == 3720);
    CHECK(counts.at(12) == 22630);
    CHECK(counts.at(14) == 156240);
    CHECK(reference::dfs_cycle_count(g, 10) ==
          dfs_cycle_count(g, 10));
}

TEST_CASE("predicted edge spectrum bookkeeping") {
    auto H = expand_qc(tanner_155_fixture());
    auto profile = validate_biregular(H);
    auto spec = clustered_gram_spectrum(H, profile);
    long mult = 0;
    for (auto& [v, c] : spec) mult += c;
    CHECK(mult == profile.rank);  // nonzero eigenvalues only

    auto pred = predict_edge_spectrum(profile, spec);
    CHECK(pred.step_total[1] == 4 * profile.rank - 2);
    CHECK(pred.step_total[2] ==
          2 * (profile.n - profile.rank) + 2 * (profile.m - profile.rank));
    CHECK(pred.step_total[3] ==
          2 * profile.edge_count - 2 * (profile.m + profile.n) + 2);
    CHECK(pred.total_multiplicity() == 2 * profile.edge_count);

    auto ae = build_edge_matrix(build_tanner_graph(H));
    auto traces = edge_power_traces(ae, 14);
    for (int k = 1; k <= 7; ++k) {
        double exact = traces[2 * k].get_d();
        double predicted = pred.power_sum(2 * k).real();
        CHECK(std::abs(predicted - exact) <=
              1e-6 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("full verification harness on small fixtures") {
    VerificationOptions opt;
    opt.Kmax = 5;
    auto rep = verify_methods(k33(), opt);
    CHECK(rep.agree);
    CHECK(rep.girth == 4);
    CHECK(rep.theorem2_checked);
    CHECK(rep.theorem2_max_rel_err <= 1e-6);

    int found = 0;
    for (std::uint64_t seed = 1; found < 8 && seed < 100; ++seed) {
        auto R = random_biregular(8, 12, 2, 3, seed);
        if (!R) continue;
        ++found;
        auto r = verify_methods(*R, opt);
        if (!r.agree)
            for (const auto& d : r.disagreements) MESSAGE(d);
        CHECK(r.agree);
    }
    CHECK(found == 8);
}
