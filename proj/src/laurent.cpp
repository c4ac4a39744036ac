#include "kcg/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "zpoly.hpp"

namespace kcg {

LaurentPoly::LaurentPoly() : coeffs_{Integer(1)} {}

LaurentPoly::LaurentPoly(std::vector<Integer> canonical_coeffs)
    : coeffs_(std::move(canonical_coeffs)) {}

LaurentPoly LaurentPoly::canonicalize(std::vector<Integer> coeffs, long /*offset*/) {
  // The offset only records the t^k unit, which canonical form discards.
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs.end()) throw Error("zero polynomial has no canonical form");
  coeffs.erase(coeffs.begin(), first);
  detail::trim(coeffs);
  if (coeffs.front() < 0)
    for (auto& c : coeffs) c = -c;
  return LaurentPoly(std::move(coeffs));
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(';', pos);
    std::string token(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    Integer c;
    if (token.empty() || c.set_str(token, 10) != 0)
      throw Error("bad polynomial: '" + std::string(text) + "'");
    coeffs.push_back(std::move(c));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return canonicalize(std::move(coeffs));
}

std::string LaurentPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ';';
    out += coeffs_[i].get_str();
  }
  return out;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  return LaurentPoly::canonicalize(detail::mul(p.coeffs(), q.coeffs()));
}

LaurentPoly reciprocal(const LaurentPoly& p) {
  std::vector<Integer> r(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentPoly::canonicalize(std::move(r));
}

bool is_symmetric(const LaurentPoly& p) { return reciprocal(p) == p; }

Integer eval_int(const LaurentPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = detail::exact_div(a.coeffs(), b.coeffs());
  if (!q || q->empty()) return std::nullopt;
  return LaurentPoly::canonicalize(std::move(*q));
}

LaurentPoly Factorization::expand() const {
  // Every canonical factor has a positive constant term, so the product of
  // the factors is already canonical and `unit` is +1 for canonical input.
  std::vector<Integer> acc{Integer(1)};
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) acc = detail::mul(acc, f.coeffs());
  return LaurentPoly::canonicalize(std::move(acc));
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  if (unit < 0) out << "-1" << (factors.empty() ? "" : " * ");
  if (factors.empty() && unit > 0) out << "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " * ";
    out << '(' << factors[i].factor.to_string() << ")^" << factors[i].multiplicity;
  }
  return out.str();
}

}  // namespace kcg
