#pragma once

#include <complex>
#include <vector>

#include "kcg/laurent.hpp"

namespace kcg {

/// Roots on the unit circle are those with ||z| - 1| below this.
inline constexpr double kUnitCircleTolerance = 1e-8;

/// All complex roots, from companion-matrix eigenvalues polished by Newton
/// iteration. Accurate for polynomials with simple roots.
/// Throws Error("root isolation failed") if polishing does not converge.
std::vector<std::complex<double>> complex_roots(const LaurentPoly& p);

/// Arguments in (0, pi] of the unit-circle roots, ascending; each conjugate
/// pair appears once.
std::vector<double> unit_circle_angles(const LaurentPoly& p);

/// |p(e^{i theta})| divided by the sum of |coefficients|.
double scaled_value_on_circle(const LaurentPoly& p, double theta);

}  // namespace kcg
