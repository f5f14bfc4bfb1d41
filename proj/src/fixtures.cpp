#include "tanner/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace tanner {

PolynomialParityMatrix tanner_155_fixture() {
    std::vector<std::vector<int>> exp = {
        {1, 2, 4, 8, 16}, {5, 10, 20, 9, 18}, {25, 19, 7, 14, 28}};
    std::vector<std::vector<std::vector<int>>> entries(
        3, std::vector<std::vector<int>>(5));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) entries[i][j] = {exp[i][j]};
    return {3, 5, 31, std::move(entries)};
}

MonomialFixture monomial_fixture(int n) {
    std::vector<int> exps(n - 1);
    for (int j = 1; j < n; ++j) exps[j - 1] = n - j;
    return generate_monomial_fixture(n, exps);
}

std::optional<ScalarParityMatrix> random_biregular(int m, int n, int var_degree,
                                                   int check_degree,
                                                   std::uint64_t seed) {
    if (static_cast<long>(m) * check_degree != static_cast<long>(n) * var_degree)
        return std::nullopt;
    if (check_degree > n || var_degree > m) return std::nullopt;

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * var_degree);
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < var_degree; ++d) stubs[c * var_degree + d] = c;

    for (int attempt = 0; attempt < 500; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        // row r takes stubs [r*check_degree, (r+1)*check_degree)
        std::vector<std::set<int>> rows(m);
        bool simple = true;
        for (int r = 0; r < m && simple; ++r)
            for (int d = 0; d < check_degree; ++d)
                if (!rows[r].insert(stubs[r * check_degree + d]).second) {
                    simple = false;
                    break;
                }
        if (!simple) continue;
        std::vector<std::vector<int>> rvec(m);
        for (int r = 0; r < m; ++r) rvec[r].assign(rows[r].begin(), rows[r].end());
        ScalarParityMatrix H(m, n, std::move(rvec));
        if (is_connected(build_tanner_graph(H))) return H;
    }
    return std::nullopt;
}

}  // namespace tanner
