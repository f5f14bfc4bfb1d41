#ifndef TANNER_FORMATS_HPP
#define TANNER_FORMATS_HPP

#include <string>
#include <vector>

#include "tanner/matrix.hpp"

namespace tanner {

/// Standard sparse LDPC interchange format. Layout:
///   n m / max-col-weight max-row-weight / col weights / row weights /
///   n column support lines (1-based, zero padding ignored) /
///   m row support lines.
ScalarParityMatrix parse_alist(const std::string& text);
std::string write_alist(const ScalarParityMatrix& H);

/// Exponent-matrix format: header "n_c n_v N", then n_c rows of n_v
/// cells; a cell is "-1" (zero polynomial) or comma-separated exponents.
PolynomialParityMatrix parse_expmat(const std::string& text,
                                    std::vector<std::string>* warnings = nullptr,
                                    bool strict = false);
std::string write_expmat(const PolynomialParityMatrix& pm);

}  // namespace tanner

#endif
