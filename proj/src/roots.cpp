#include "kcg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace kcg {
namespace {

using cld = std::complex<long double>;

// Horner evaluation of p and p' at z.
void evaluate(const std::vector<long double>& c, cld z, cld& value, cld& slope) {
  value = 0;
  slope = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const LaurentPoly& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  std::vector<long double> c;
  for (const auto& x : p.coeffs()) c.push_back(static_cast<long double>(x.get_d()));

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = static_cast<double>(-c[i] / c[n]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("root isolation failed");

  long double scale = 0;
  for (auto x : c) scale += std::fabs(x);

  std::vector<std::complex<double>> roots;
  for (int k = 0; k < n; ++k) {
    cld z(solver.eigenvalues()[k].real(), solver.eigenvalues()[k].imag());
    cld value, slope;
    for (int it = 0; it < 60; ++it) {
      evaluate(c, z, value, slope);
      if (std::abs(slope) == 0) break;
      const cld step = value / slope;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    evaluate(c, z, value, slope);
    const long double mod = std::max<long double>(1, std::abs(z));
    if (!std::isfinite(std::abs(z)) || std::abs(value) / (scale * std::pow(mod, n)) > 1e-10L)
      throw Error("root isolation failed");
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return roots;
}

std::vector<double> unit_circle_angles(const LaurentPoly& p) {
  std::vector<double> angles;
  for (const auto& z : complex_roots(p)) {
    if (std::fabs(std::abs(z) - 1.0) >= kUnitCircleTolerance) continue;
    const double a = std::fabs(std::arg(z));
    if (a <= 0.0) continue;
    angles.push_back(std::min(a, std::numbers::pi));
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> merged;
  for (double a : angles)
    if (merged.empty() || a - merged.back() > 1e-7) merged.push_back(a);
  return merged;
}

double scaled_value_on_circle(const LaurentPoly& p, double theta) {
  std::complex<double> acc = 0;
  const std::complex<double> w = std::polar(1.0, theta);
  double scale = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * w + it->get_d();
    scale += std::fabs(it->get_d());
  }
  return std::abs(acc) / scale;
}

}  // namespace kcg
