#ifndef TANNER_COMMON_HPP
#define TANNER_COMMON_HPP

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace tanner {

using Int = mpz_class;

/// Girth value reported for forests.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

enum class errc {
    not_biregular,
    degree_too_small,
    disconnected,
    snap_failure,
    non_integer_count,
    k_too_large,
    girth_precondition_unmet,
    budget_exceeded,
    multiplicity_mismatch,
    disagreement,
    parse_error,
    inconsistent_supports,
    no_convergence,
    missing_moments,
    exponent_out_of_range,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

/// Worker count for the OpenMP kernels. Honors TANNER_CYCLES_THREADS.
int thread_count();

/// Node-expansion cap for the DFS oracle. Honors TANNER_CYCLES_DFS_BUDGET.
long long dfs_budget();

inline constexpr long long kDefaultDfsBudget = 500'000'000LL;

}  // namespace tanner

#endif
