// Factorization of integer polynomials (Zassenhaus).
//
// Pipeline: content -> Yun square-free decomposition over Z -> for each
// square-free part: first admissible prime p, Berlekamp over Z/p, quadratic
// multifactor Hensel lifting to p^(2^j) beyond the Mignotte bound, then
// recombination over subsets of increasing size checked by exact division.

#include <algorithm>
#include <map>

#include "kcg/laurent.hpp"
#include "zpoly.hpp"

namespace kcg {
namespace {

using detail::ModPoly;
using detail::PrimeField;
using detail::ResidueRing;
using detail::ZPoly;

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  auto take = [&](const Integer& d) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  take(2);
  for (Integer d = 3; d * d <= n; d += 2) take(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Yun's algorithm; returns (square-free part, multiplicity) with parts of
// positive degree, each primitive with positive leading coefficient.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  const ZPoly df = detail::derivative(f);
  const ZPoly b = detail::gcd(f, df);
  ZPoly c = *detail::exact_div(f, b);
  ZPoly d = detail::sub(*detail::exact_div(df, b), detail::derivative(c));
  for (int i = 1; detail::deg(c) > 0; ++i) {
    const ZPoly g = detail::gcd(c, d);
    c = *detail::exact_div(c, g);
    d = detail::sub(*detail::exact_div(d, g), detail::derivative(c));
    if (detail::deg(g) > 0) out.emplace_back(g, i);
  }
  return out;
}

ModPoly powmod(ModPoly base, Integer e, const ModPoly& mod, const PrimeField& F) {
  ModPoly acc{1};
  base = F.rem(base, mod);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = F.rem(F.mul(acc, base), mod);
    e >>= 1;
    if (e > 0) base = F.rem(F.mul(base, base), mod);
  }
  return acc;
}

// Berlekamp factorization of a monic square-free polynomial over Z/p.
std::vector<ModPoly> berlekamp(const ModPoly& f, const PrimeField& F) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Row i of Q holds x^(i p) mod f.
  std::vector<std::vector<std::int64_t>> Q(n, std::vector<std::int64_t>(n, 0));
  const ModPoly xp = powmod(ModPoly{0, 1}, F.p, f, F);
  ModPoly row{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) Q[i][j] = row[j];
    row = F.rem(F.mul(row, xp), f);
  }

  // Null space of (Q - I)^T: vectors v with v Q = v.
  std::vector<std::vector<std::int64_t>> A(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[j][i] = F.reduce(Q[i][j] - (i == j ? 1 : 0));
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int r = rank; r < n; ++r)
      if (A[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[sel], A[rank]);
    const std::int64_t inv = F.inverse(A[rank][col]);
    for (auto& x : A[rank]) x = x * inv % F.p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      const std::int64_t c = A[r][col];
      for (int k = 0; k < n; ++k) A[r][k] = F.reduce(A[r][k] - c * A[rank][k] % F.p);
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++rank;
  }
  std::vector<ModPoly> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    ModPoly v(n, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = F.reduce(-A[r][free]);
    F.trim(v);
    basis.push_back(std::move(v));
  }
  const std::size_t r = basis.size();
  if (r == 1) return {f};

  std::vector<ModPoly> factors{f};
  for (const auto& v : basis) {
    if (v.size() <= 1) continue;  // the constants
    for (std::int64_t s = 0; s < F.p; ++s) {
      ModPoly shifted = v;
      shifted[0] = F.reduce(shifted[0] - s);
      F.trim(shifted);
      std::vector<ModPoly> next;
      for (const auto& w : factors) {
        ModPoly g = w.size() > 2 ? F.gcd(w, shifted) : ModPoly{1};
        if (g.size() > 1 && g.size() < w.size()) {
          ModPoly q, rem;
          F.divmod(w, g, q, rem);
          next.push_back(std::move(g));
          next.push_back(F.monic(q));
        } else {
          next.push_back(w);
        }
      }
      factors = std::move(next);
      if (factors.size() == r) return factors;
    }
  }
  return factors;
}

ZPoly to_z(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(a[i]);
  return r;
}

struct HenselPair {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2.
HenselPair hensel_step(const ZPoly& f, HenselPair in, const Integer& m) {
  const ResidueRing R{m * m};
  const ZPoly e = R.sub(f, R.mul(in.g, in.h));
  ZPoly q, r;
  R.divmod_monic(R.mul(in.s, e), in.h, q, r);
  HenselPair out;
  out.g = R.add(in.g, R.add(R.mul(in.t, e), R.mul(q, in.g)));
  out.h = R.add(in.h, r);
  const ZPoly b = R.sub(R.add(R.mul(in.s, out.g), R.mul(in.t, out.h)), ZPoly{Integer(1)});
  ZPoly c, d;
  R.divmod_monic(R.mul(in.s, b), out.h, c, d);
  out.s = R.sub(in.s, d);
  out.t = R.sub(in.t, R.add(R.mul(in.t, b), R.mul(c, out.g)));
  return out;
}

// Lifts monic factors u[lo, hi) of f mod p to monic factors mod M = p^(2^j).
void lift_tree(const ZPoly& f, const std::vector<ModPoly>& u, std::size_t lo, std::size_t hi,
               const PrimeField& F, const Integer& M, std::vector<ZPoly>& out) {
  const ResidueRing RM{M};
  if (hi - lo == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    out.push_back(RM.reduce(detail::scale(f, inv)));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  ModPoly g0 = F.from(ZPoly{f.back()});
  for (std::size_t i = lo; i < mid; ++i) g0 = F.mul(g0, u[i]);
  ModPoly h0{1};
  for (std::size_t i = mid; i < hi; ++i) h0 = F.mul(h0, u[i]);
  ModPoly s0, t0;
  F.xgcd(g0, h0, s0, t0);

  HenselPair cur{to_z(g0), to_z(h0), to_z(s0), to_z(t0)};
  for (Integer m = F.p; m < M; m *= m) cur = hensel_step(f, std::move(cur), m);
  cur.g = RM.reduce(cur.g);
  cur.h = RM.reduce(cur.h);
  lift_tree(cur.g, u, lo, mid, F, M, out);
  lift_tree(cur.h, u, mid, hi, F, M, out);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive square-free polynomial of positive degree.
std::vector<ZPoly> zassenhaus(const ZPoly& g) {
  const int n = detail::deg(g);
  if (n == 1) return {g};

  // First prime not dividing the leading coefficient for which g stays
  // square-free.
  PrimeField F{2};
  ModPoly gp;
  for (long p = 2;; ++p) {
    if (!is_prime(p)) continue;
    F = PrimeField{p};
    gp = F.from(g);
    if (static_cast<int>(gp.size()) - 1 != n) continue;
    if (F.gcd(gp, F.derivative(gp)).size() == 1) break;
  }

  const std::vector<ModPoly> u = berlekamp(F.monic(gp), F);
  if (u.size() == 1) return {g};

  // Mignotte: coefficients of lc(g) * h / lc(h) for any factor h of g are
  // bounded by lc(g) * 2^n * ||g||_2.
  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  const Integer lc = g.back();
  const Integer bound = 2 * lc * (Integer(1) << n) * (sqrt(norm2) + 1);
  Integer M = F.p;
  while (M <= bound) M *= M;

  std::vector<ZPoly> lifted;
  lift_tree(g, u, 0, u.size(), F, M, lifted);

  const ResidueRing RM{M};
  std::vector<ZPoly> result;
  std::vector<ZPoly> remaining = lifted;
  ZPoly f = g;
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly cand{f.back()};
      for (auto i : idx) cand = RM.mul(cand, remaining[i]);
      cand = detail::primitive_part(RM.symmetric(cand));
      if (auto q = detail::exact_div(f, cand)) {
        result.push_back(cand);
        f = detail::primitive_part(*q);
        for (std::size_t k = s; k-- > 0;) remaining.erase(remaining.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
    } while (next_combination(idx, remaining.size()));
    if (!found) ++s;
  }
  if (detail::deg(f) > 0) result.push_back(f);
  return result;
}

}  // namespace

Factorization factor(const LaurentPoly& p) {
  if (p.degree() > kMaxFactorDegree) throw Error("degree limit exceeded");

  std::map<LaurentPoly, int> collected;
  const ZPoly& coeffs = p.coeffs();
  const Integer c = detail::content(coeffs);
  for (const auto& [prime, e] : factor_integer(c))
    collected[LaurentPoly::canonicalize({prime})] += e;

  const ZPoly f = detail::primitive_part(coeffs);
  if (detail::deg(f) > 0) {
    for (const auto& [part, mult] : squarefree_decomposition(f))
      for (const auto& q : zassenhaus(part)) collected[LaurentPoly::canonicalize(q)] += mult;
  }

  Factorization out;
  for (auto& [q, m] : collected) out.factors.push_back({q, m});
  out.unit = 1;
  return out;
}

}  // namespace kcg
