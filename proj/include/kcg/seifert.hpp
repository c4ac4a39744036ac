#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kcg/laurent.hpp"

namespace kcg {

/// Square integer matrix V of a Seifert form. The dimension is even and
/// det(V - V^T) = 1; both are checked on construction. 0x0 is the unknot.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(std::vector<std::vector<Integer>> rows);

  /// Rows separated by `;`, entries by `,`: `-1,1;0,-1`. Empty text is 0x0.
  static SeifertMatrix parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  const Integer& at(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }
  std::string to_string() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// det(V - t V^T), canonicalized.
/// Throws Error("not a knot Seifert matrix") unless |value at 1| = 1.
LaurentPoly alexander(const SeifertMatrix& v);

/// Signature of V + V^T by exact congruence diagonalization over Q.
int murasugi_signature(const SeifertMatrix& v);

/// Signature of the Hermitian matrix (1-w)V + (1-conj w)V^T, w = e^{i theta},
/// from its eigenvalues. Throws Error("indeterminate signature sample") if an
/// eigenvalue lies within 1e-9 (1 + ||M||_inf) of zero.
int hermitian_signature(const SeifertMatrix& v, double theta);

/// Levine-Tristram signature at theta in (0, pi]; at a unit-circle root of
/// the Alexander polynomial, the mean of the two one-sided limits.
int lt_signature(const SeifertMatrix& v, double theta);

struct SignatureArc {
  double lo = 0;  // open interval (lo, hi)
  double hi = 0;
  int value = 0;
};

struct JumpPoint {
  double angle = 0;
  int jump = 0;      // right value - left value
  int averaged = 0;  // (left + right) / 2; exact since both are even
};

/// Piecewise-constant signature function on the upper unit semicircle.
struct SignatureProfile {
  std::vector<SignatureArc> arcs;
  std::vector<JumpPoint> jump_points;
  int value_at_pi = 0;

  /// Value at theta in (0, pi], averaged at jump points.
  int value_at(double theta) const;
};

/// Jump points sit at the unit-circle roots of the Alexander polynomial;
/// each arc between them is sampled once (with perturbed retries).
SignatureProfile signature_profile(const SeifertMatrix& v);

}  // namespace kcg
