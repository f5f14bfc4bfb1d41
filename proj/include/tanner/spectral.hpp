#ifndef TANNER_SPECTRAL_HPP
#define TANNER_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "tanner/common.hpp"
#include "tanner/matrix.hpp"

namespace tanner {

using cd = std::complex<double>;

/// Exact power sums T_k = Tr((H H^T)^k) of the Gram spectrum,
/// zeros included. T[0] is fixed to m.
struct PowerSumTable {
    int K = 0;
    std::vector<Int> T;  // T[0..K]

    const Int& at(int k) const {
        if (k < 0 || k > K)
            throw Error(errc::missing_moments, "power sum index out of range");
        return T[k];
    }
};

/// E_k = sum over the mu shifted eigenvalues alpha = lambda - (q1+q2),
/// lambda ranging over the nonzero Gram eigenvalues. E[0] = mu; E_k = 0
/// for k < 0 by convention.
struct ShiftedMomentTable {
    int K = 0;
    std::vector<Int> E;  // E[0..K]

    Int at(int k) const {
        if (k < 0) return 0;
        if (k > K)
            throw Error(errc::missing_moments, "shifted moment index out of range");
        return E[k];
    }
};

/// Characteristic polynomial of one root-of-unity Gram block
/// H(rho^j) H(rho^j)^*. Coefficients are stored low to high with the
/// leading 1 included; `snapped` holds the nearest-integer image when
/// every coefficient is within snap tolerance.
struct CharPolyBlock {
    int j = 0;
    std::vector<cd> coeffs;
    std::vector<long long> snapped;
    bool snap_ok = false;
};

struct CharPolySet {
    int N = 0;
    int n_c = 0;
    std::vector<CharPolyBlock> blocks;  // indexed by j
};

/// Exact traces of Gram powers via the split-power inner-product scheme:
/// T_{a+b} accumulated from the rows of (HH^T)^a and (HH^T)^b.
PowerSumTable gram_power_traces(const ScalarParityMatrix& H, int K);

namespace reference {
/// Serial reference: dense bignum matrix powers with a direct trace.
PowerSumTable gram_power_traces(const ScalarParityMatrix& H, int K);
}  // namespace reference

/// Rank over the rationals by fraction-free Bareiss elimination.
long exact_rank(const ScalarParityMatrix& H);

ShiftedMomentTable shifted_moments(const PowerSumTable& ps,
                                   const BiregularProfile& profile);
ShiftedMomentTable shifted_moments(const PowerSumTable& ps,
                                   const BiregularProfile& profile, int K);

/// Power sums of the roots of a monic integer polynomial
/// (coefficients low to high, leading 1 included). Result[k-1] is the
/// k-th power sum, k = 1..K.
std::vector<Int> newton_power_sums(const std::vector<Int>& monic_coeffs, int K);

/// Complex-coefficient variant used on root-of-unity blocks.
std::vector<cd> newton_power_sums(const std::vector<cd>& monic_coeffs, int K);

/// H(rho^j) H(rho^j)^* as a row-major n_c x n_c Hermitian matrix.
std::vector<cd> root_of_unity_gram(const PolynomialParityMatrix& pm, int j);

CharPolySet roots_of_unity_charpolys(const PolynomialParityMatrix& pm);

/// Eigenvalues of a small Hermitian matrix (row-major, d x d) by cyclic
/// Jacobi rotations, sorted descending.
std::vector<double> hermitian_eigenvalues(std::vector<cd> M, int d);

/// QC fast path: per-block moments via Newton's identities, summed over
/// all blocks and snapped to exact integers.
PowerSumTable qc_power_traces(const CharPolySet& cps, int K);

}  // namespace tanner

#endif
