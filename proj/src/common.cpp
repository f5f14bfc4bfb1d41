#include "tanner/common.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tanner {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_biregular: return "NotBiregular";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::disconnected: return "Disconnected";
        case errc::snap_failure: return "SnapFailure";
        case errc::non_integer_count: return "NonIntegerCount";
        case errc::k_too_large: return "KTooLarge";
        case errc::girth_precondition_unmet: return "GirthPreconditionUnmet";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::multiplicity_mismatch: return "MultiplicityMismatch";
        case errc::disagreement: return "Disagreement";
        case errc::parse_error: return "ParseError";
        case errc::inconsistent_supports: return "InconsistentSupports";
        case errc::no_convergence: return "NoConvergence";
        case errc::missing_moments: return "MissingMoments";
        case errc::exponent_out_of_range: return "ExponentOutOfRange";
    }
    return "UnknownError";
}

int thread_count() {
    if (const char* env = std::getenv("TANNER_CYCLES_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

long long dfs_budget() {
    if (const char* env = std::getenv("TANNER_CYCLES_DFS_BUDGET")) {
        long long v = std::atoll(env);
        if (v >= 1) return v;
    }
    return kDefaultDfsBudget;
}

}  // namespace tanner
