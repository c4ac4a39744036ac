#include "zpoly.hpp"

#include <algorithm>
#include <utility>

namespace kcg::detail {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return {};
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lead = b.back();
  for (int i = deg(a); i >= deg(b); --i) {
    const auto k = static_cast<std::size_t>(i - deg(b));
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lead.get_mpz_t());
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

namespace {

ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const Integer& lead = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const auto k = static_cast<std::size_t>(deg(a) - deg(b));
    const Integer top = a.back();
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= top * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = primitive_part(a0);
  ZPoly b = primitive_part(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

// ---- PrimeField ------------------------------------------------------------

std::int64_t PrimeField::inverse(std::int64_t a) const {
  std::int64_t t = 0, new_t = 1, r = p, new_r = reduce(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

ModPoly PrimeField::from(const ZPoly& a) const {
  ModPoly r(a.size());
  const Integer pz = p;
  Integer tmp;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(tmp.get_mpz_t(), a[i].get_mpz_t(), pz.get_mpz_t());
    r[i] = tmp.get_si();
  }
  trim(r);
  return r;
}

void PrimeField::trim(ModPoly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly PrimeField::sub(const ModPoly& a, const ModPoly& b) const {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] - b[i]);
  trim(r);
  return r;
}

ModPoly PrimeField::mul(const ModPoly& a, const ModPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void PrimeField::divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::int64_t inv = inverse(b.back());
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    const std::int64_t c = r[i] * inv % p;
    const auto k = static_cast<std::size_t>(i - db);
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = reduce(r[k + j] - c * b[j] % p);
  }
  trim(r);
  trim(q);
}

ModPoly PrimeField::rem(const ModPoly& a, const ModPoly& b) const {
  ModPoly q, r;
  divmod(a, b, q, r);
  return r;
}

ModPoly PrimeField::monic(const ModPoly& a) const {
  if (a.empty()) return a;
  const std::int64_t inv = inverse(a.back());
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * inv % p;
  return r;
}

ModPoly PrimeField::gcd(ModPoly a, ModPoly b) const {
  while (!b.empty()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ModPoly PrimeField::derivative(const ModPoly& a) const {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
  trim(r);
  return r;
}

ModPoly PrimeField::xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1)));
    t0 = std::exchange(t1, sub(t0, mul(q, t1)));
  }
  const std::int64_t inv = inverse(r0.back());
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  trim(s0);
  trim(t0);
  s = s0;
  t = t0;
  return monic(r0);
}

// ---- ResidueRing -----------------------------------------------------------

ZPoly ResidueRing::reduce(const ZPoly& a) const {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ZPoly ResidueRing::add(const ZPoly& a, const ZPoly& b) const { return reduce(detail::add(a, b)); }
ZPoly ResidueRing::sub(const ZPoly& a, const ZPoly& b) const { return reduce(detail::sub(a, b)); }
ZPoly ResidueRing::mul(const ZPoly& a, const ZPoly& b) const { return reduce(detail::mul(a, b)); }

void ResidueRing::divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) const {
  r = reduce(a);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Integer(0));
  const int db = deg(b);
  for (int i = deg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    const Integer c = r[i];
    const auto k = static_cast<std::size_t>(i - db);
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[k + j] -= c * b[j];
      mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  trim(r);
  q = reduce(q);
}

ZPoly ResidueRing::symmetric(const ZPoly& a) const {
  ZPoly r = reduce(a);
  const Integer half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  trim(r);
  return r;
}

}  // namespace kcg::detail
