#ifndef TANNER_CYCLE_FORMULAS_HPP
#define TANNER_CYCLE_FORMULAS_HPP

#include <map>
#include <string>
#include <vector>

#include "tanner/common.hpp"
#include "tanner/matrix.hpp"
#include "tanner/spectral.hpp"

namespace tanner {

/// S_{alpha,k} = xi_1^k + xi_2^k for the roots of xi^2 - alpha xi + q1 q2,
/// computed by the two-term recursion. S[k] for k = 1..K.
struct SPairSequence {
    Int alpha;
    std::vector<Int> S;  // S[0] unused, S[1..K]
};

SPairSequence s_sequence(const Int& alpha, const Int& q1q2, int K);

/// Sum of S_{alpha,k} over all alpha != -(q1+q2), evaluated from the
/// shifted moment table alone (no eigenvalues needed): the recursion is
/// lifted to the coefficient level, so sum S_k = sum_j d_{k,j} (q1q2)^j
/// E_{k-2j} with d_{k,j} = d_{k-1,j} - d_{k-2,j-1}.
std::vector<Int> lifted_s_sums(const ShiftedMomentTable& E, const Int& q1q2,
                               int K);

/// The A_{2k} girth-condition constants, k = 2..7. Divided differences
/// use homogeneous sums so q1 == q2 is well-defined.
struct AConstantSet {
    long q1 = 0, q2 = 0;
    std::vector<Int> A;  // A[k] = A_{2k}, k = 2..7

    const Int& at(int k) const {
        if (k < 2 || k > 7)
            throw Error(errc::k_too_large, "A_{2k} only tabulated for k <= 7");
        return A[k];
    }
};

AConstantSet a_constants(long q1, long q2);

/// Coefficients a_{k,k-i} of the lambda-power expansion, 2 <= k <= 7.
struct CoefficientTable {
    long q1 = 0, q2 = 0;
    // a[k][i] = a_{k,k-i}; zero for i > k or outside the tabulated range.
    std::map<int, std::map<int, Int>> a;

    Int at(int k, int i) const;
};

CoefficientTable a_coefficients(long q1, long q2);

enum class CountMethod { recursive, ek, lambda };

const char* method_name(CountMethod m);

/// N_{2k} by one formula route; counts keyed by k.
struct CycleCountReport {
    CountMethod method = CountMethod::recursive;
    std::map<int, Int> counts;
};

/// Theorem-style recursion on moment tables; valid for any K the moment
/// table covers.
CycleCountReport count_recursive(const BiregularProfile& profile,
                                 const ShiftedMomentTable& E, int K);

/// Closed E_k expansion with the printed coefficient pattern (k <= 7).
CycleCountReport count_via_ek(const BiregularProfile& profile,
                              const ShiftedMomentTable& E, int K);

/// Sequential lambda-power chain N_4 -> N_14; needs the girth to check
/// each item's stated precondition.
CycleCountReport count_via_lambda(const BiregularProfile& profile,
                                  const PowerSumTable& T, int girth, int K);

/// Largest k for which the lambda-power gate g >= 2k holds: 2 or 3 need
/// g >= 4, 4 or 5 need g >= 6, 6 or 7 need g >= 8.
int lambda_k_limit(int girth);

/// Corollary-style girth certification from traces alone.
struct GirthCertificate {
    /// Largest k with g >= 2k established (conditions j = 2..k-1 all hold).
    int certified_k = 2;
    /// Certified lower bound 2 * certified_k.
    int certified_girth = 4;
    /// Condition results: (j, T_j == |E| * A_{2j}).
    std::vector<std::pair<int, bool>> conditions;
};

GirthCertificate girth_certificate(const BiregularProfile& profile,
                                   const PowerSumTable& T);

}  // namespace tanner

#endif
