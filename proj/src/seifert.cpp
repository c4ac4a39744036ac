#include "kcg/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "kcg/roots.hpp"

namespace kcg {
namespace {

using Rational = mpq_class;
constexpr double kPi = std::numbers::pi;
// A query angle this close to a root of the Alexander polynomial is the root.
constexpr double kRootAngleTolerance = 1e-8;

std::vector<std::vector<Integer>> v_minus_t_vt(const SeifertMatrix& v, const Integer& t) {
  const int n = v.size();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = v.at(i, j) - t * v.at(j, i);
  return m;
}

// Unit-circle root angles of delta, computed per distinct irreducible factor
// so every polished root is simple.
std::vector<double> root_angles(const LaurentPoly& delta) {
  std::vector<double> out;
  for (const auto& [q, m] : factor(delta).factors) {
    if (q.degree() < 1) continue;
    const auto a = unit_circle_angles(q);
    out.insert(out.end(), a.begin(), a.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sample_arc(const SeifertMatrix& v, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double step = (hi - lo) / 16.0;
  for (int attempt = 0; attempt <= 8; ++attempt) {
    // mid, mid + step, mid - step, mid + 2 step, ...
    const int k = (attempt + 1) / 2;
    const double theta = mid + (attempt % 2 ? 1 : -1) * k * step;
    try {
      return hermitian_signature(v, theta);
    } catch (const Error&) {
      if (attempt == 8) throw;
    }
  }
  throw Error("indeterminate signature sample");
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (const auto& r : rows_)
    if (r.size() != n) throw Error("Seifert matrix is not square");
  if (n % 2 != 0) throw Error("Seifert matrix has odd dimension");
  if (determinant(v_minus_t_vt(*this, 1)) != 1) throw Error("Seifert matrix has det(V - V^T) != 1");
}

SeifertMatrix SeifertMatrix::parse(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  auto strip = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  if (strip(std::string(text)).empty()) return SeifertMatrix{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view row = text.substr(pos, end - pos);
    std::vector<Integer> entries;
    std::size_t rp = 0;
    while (rp <= row.size()) {
      const std::size_t re = std::min(row.find(',', rp), row.size());
      std::string token = strip(std::string(row.substr(rp, re - rp)));
      if (!token.empty() && token.front() == '+') token.erase(0, 1);
      Integer x;
      if (token.empty() || x.set_str(token, 10) != 0)
        throw Error("bad Seifert matrix: '" + std::string(text) + "'");
      entries.push_back(std::move(x));
      rp = re + 1;
    }
    rows.push_back(std::move(entries));
    pos = end + 1;
  }
  return SeifertMatrix(std::move(rows));
}

std::string SeifertMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out += ',';
      out += rows_[i][j].get_str();
    }
  }
  return out;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPoly alexander(const SeifertMatrix& v) {
  const int n = v.size();
  // det(V - tV^T) has degree <= n: interpolate through t = 0..n with Newton
  // divided differences.
  std::vector<Rational> dd(n + 1);
  for (int k = 0; k <= n; ++k) dd[k] = Rational(determinant(v_minus_t_vt(v, k)));
  for (int level = 1; level <= n; ++level)
    for (int k = n; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / Rational(level);

  std::vector<Rational> poly{dd[n]};
  for (int j = n - 1; j >= 0; --j) {
    // poly = poly * (t - j) + dd[j]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * j;
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error("not a knot Seifert matrix");
    coeffs.push_back(c.get_num());
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; }))
    throw Error("not a knot Seifert matrix");
  auto delta = LaurentPoly::canonicalize(std::move(coeffs));
  if (abs(eval_int(delta, 1)) != 1) throw Error("not a knot Seifert matrix");
  return delta;
}

int murasugi_signature(const SeifertMatrix& v) {
  const int n = v.size();
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = Rational(v.at(i, j) + v.at(j, i));

  auto swap_index = [&](int a, int b) {
    if (a == b) return;
    std::swap(s[a], s[b]);
    for (auto& row : s) std::swap(row[a], row[b]);
  };

  int signature = 0;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n && pivot < 0; ++i)
      if (s[i][i] != 0) pivot = i;
    if (pivot < 0) {
      // Zero diagonal: fold a nonzero off-diagonal entry onto the diagonal
      // with the congruence e_i -> e_i + e_j.
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (s[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;  // remaining block is zero
      for (int c = 0; c < n; ++c) s[pi][c] += s[pj][c];
      for (int r = 0; r < n; ++r) s[r][pi] += s[r][pj];
      pivot = pi;
    }
    swap_index(k, pivot);
    const Rational d = s[k][k];
    signature += sgn(d);
    for (int i = k + 1; i < n; ++i) {
      if (s[i][k] == 0) continue;
      const Rational f = s[i][k] / d;
      for (int j = k + 1; j < n; ++j) s[i][j] -= f * s[k][j];
    }
    for (int i = k + 1; i < n; ++i) s[i][k] = s[k][i] = 0;
  }
  return signature;
}

int hermitian_signature(const SeifertMatrix& v, double theta) {
  const int n = v.size();
  if (n == 0) return 0;
  const std::complex<double> w = std::polar(1.0, theta);
  const std::complex<double> a = 1.0 - w, b = 1.0 - std::conj(w);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a * v.at(i, j).get_d() + b * v.at(j, i).get_d();
  const double norm_inf = m.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("indeterminate signature sample");
  const double tol = 1e-9 * (1.0 + norm_inf);
  int signature = 0;
  for (int k = 0; k < n; ++k) {
    const double lambda = solver.eigenvalues()[k];
    if (std::fabs(lambda) < tol) throw Error("indeterminate signature sample");
    signature += lambda > 0 ? 1 : -1;
  }
  return signature;
}

int lt_signature(const SeifertMatrix& v, double theta) {
  if (!(theta > 0.0) || theta > kPi + 1e-12) throw Error("angle outside (0, pi]");
  for (double root : root_angles(alexander(v)))
    if (std::fabs(root - theta) < kRootAngleTolerance) return signature_profile(v).value_at(root);
  return hermitian_signature(v, std::min(theta, kPi));
}

int SignatureProfile::value_at(double theta) const {
  for (const auto& j : jump_points)
    if (std::fabs(j.angle - theta) < kRootAngleTolerance) return j.averaged;
  if (theta >= kPi) return value_at_pi;
  for (const auto& arc : arcs)
    if (theta > arc.lo && theta < arc.hi) return arc.value;
  return value_at_pi;
}

SignatureProfile signature_profile(const SeifertMatrix& v) {
  const auto angles = root_angles(alexander(v));
  if (!angles.empty() && angles.back() > kPi - kRootAngleTolerance)
    throw Error("root isolation failed");  // Delta(-1) is odd for a knot

  SignatureProfile profile;
  std::vector<double> cuts{0.0};
  cuts.insert(cuts.end(), angles.begin(), angles.end());
  cuts.push_back(kPi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    profile.arcs.push_back({cuts[i], cuts[i + 1], sample_arc(v, cuts[i], cuts[i + 1])});
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const int left = profile.arcs[i].value, right = profile.arcs[i + 1].value;
    profile.jump_points.push_back({angles[i], right - left, (left + right) / 2});
  }
  profile.value_at_pi = profile.arcs.back().value;
  return profile;
}

}  // namespace kcg
