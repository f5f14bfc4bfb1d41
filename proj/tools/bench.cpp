// Timing comparison of the OpenMP kernels against their serial reference
// implementations on the built-in fixtures.
#include <chrono>
#include <cstdio>

#include "tanner/fixtures.hpp"
#include "tanner/oracle.hpp"
#include "tanner/spectral.hpp"

using Clock = std::chrono::steady_clock;

template <class F>
static double time_ms(F&& f) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

static void report(const char* name, double par_ms, double ser_ms) {
    std::printf("%-28s parallel %9.2f ms   serial %9.2f ms   speedup %.2fx\n",
                name, par_ms, ser_ms, ser_ms / par_ms);
}

int main() {
    std::printf("threads: %d\n", tanner::thread_count());

    auto pm = tanner::tanner_155_fixture();
    auto H = tanner::expand_qc(pm);
    auto graph = tanner::build_tanner_graph(H);

    {
        tanner::PowerSumTable a, b;
        double p = time_ms([&] { a = tanner::gram_power_traces(H, 7); });
        double s =
            time_ms([&] { b = tanner::reference::gram_power_traces(H, 7); });
        report("gram traces [155x93]", p, s);
        if (a.T != b.T) {
            std::printf("MISMATCH in gram traces\n");
            return 1;
        }
    }
    {
        auto ae = tanner::build_edge_matrix(graph);
        std::vector<tanner::Int> a, b;
        double p = time_ms([&] { a = tanner::edge_power_traces(ae, 14); });
        double s =
            time_ms([&] { b = tanner::reference::edge_power_traces(ae, 14); });
        report("edge traces [930 dirs]", p, s);
        if (a != b) {
            std::printf("MISMATCH in edge traces\n");
            return 1;
        }
    }
    {
        std::map<int, tanner::Int> a, b;
        double p = time_ms([&] { a = tanner::dfs_cycle_count(graph, 12); });
        double s =
            time_ms([&] { b = tanner::reference::dfs_cycle_count(graph, 12); });
        report("DFS cycles to length 12", p, s);
        if (a != b) {
            std::printf("MISMATCH in DFS counts\n");
            return 1;
        }
    }
    {
        auto mono = tanner::monomial_fixture(9).pm;
        auto Hm = tanner::expand_qc(mono);
        auto gm = tanner::build_tanner_graph(Hm);
        std::map<int, tanner::Int> a, b;
        double p = time_ms([&] { a = tanner::dfs_cycle_count(gm, 10); });
        double s =
            time_ms([&] { b = tanner::reference::dfs_cycle_count(gm, 10); });
        report("DFS cycles [monomial n=9]", p, s);
        if (a != b) {
            std::printf("MISMATCH in DFS counts\n");
            return 1;
        }
    }
    return 0;
}
