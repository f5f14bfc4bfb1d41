#ifndef TANNER_FIXTURES_HPP
#define TANNER_FIXTURES_HPP

#include <cstdint>
#include <optional>

#include "tanner/matrix.hpp"

namespace tanner {

/// The (3,5)-regular [155, 91, 20] QC code: 3 x 5 exponent matrix, N = 31.
PolynomialParityMatrix tanner_155_fixture();

/// Girth-6 monomial family member for odd n, third row exponents
/// i_j = n - j (the displayed choice for n = 5, 7).
MonomialFixture monomial_fixture(int n);

/// Random connected bi-regular bipartite parity-check matrix with the
/// given variable/check degrees; deterministic in the seed. Returns
/// nullopt when no simple connected instance is found within the retry cap.
std::optional<ScalarParityMatrix> random_biregular(int m, int n, int var_degree,
                                                   int check_degree,
                                                   std::uint64_t seed);

}  // namespace tanner

#endif
