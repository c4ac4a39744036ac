#include <numbers>
#include <random>

#include "doctest.h"
#include "kcg/foxmilnor.hpp"
#include "oracles.hpp"

using namespace kcg;
using kcg::testing::P;

namespace {

constexpr double kPi = std::numbers::pi;

Factorization make(std::initializer_list<std::pair<const char*, int>> parts) {
  Factorization f;
  for (const auto& [text, m] : parts) f.factors.push_back({P(text), m});
  return f;
}

SignatureProfile single_jump(double angle, int jump) {
  SignatureProfile p;
  p.arcs = {{0, angle, 0}, {angle, kPi, jump}};
  p.jump_points = {{angle, jump, jump / 2}};
  p.value_at_pi = jump;
  return p;
}

}  // namespace

TEST_CASE("residual") {
  const auto d51 = P("1;-9;28;-39;28;-9;1");
  CHECK(residual(factor(d51)) == d51);
  CHECK(residual(make({{"1;-1;1", 2}, {"4;-7;4", 1}})) == P("4;-7;4"));
  CHECK(residual(make({{"1;-2", 1}, {"2;-1", 1}})) == LaurentPoly{});
  CHECK(residual(Factorization{}) == LaurentPoly{});
  CHECK(residual(make({{"1;-1;1", 3}})) == P("1;-1;1"));
  CHECK_THROWS_WITH_AS(residual(make({{"2;-1", 1}})), "polynomial not palindromic", Error);
  CHECK_THROWS_WITH_AS(residual(make({{"1;-2", 2}, {"2;-1", 1}})), "polynomial not palindromic", Error);
}

TEST_CASE("slice_obstruction") {
  CHECK(slice_obstruction(P("2;-5;2")) == SliceTest::pass);
  CHECK(slice_obstruction(P("1;-1;1")) == SliceTest::fail);
  CHECK(slice_obstruction(P("1")) == SliceTest::pass);
  // 3_1 # 3_1: square of a symmetric factor passes Fox-Milnor.
  CHECK(slice_obstruction(P("1;-2;3;-2;1")) == SliceTest::pass);
}

TEST_CASE("enhanced_required_factors") {
  SUBCASE("jump of 4 at a doubled factor") {
    const auto f = make({{"1;-1;1", 2}, {"1;-1;1;-1;1", 1}});
    const auto r = enhanced_required_factors(f, single_jump(kPi / 3, 4));
    CHECK(r.residual == P("1;-1;1;-1;1"));
    CHECK(r.enhanced == mul(mul(P("1;-1;1"), P("1;-1;1")), P("1;-1;1;-1;1")));
    CHECK(r.enhanced.degree() == 8);
    CHECK(gc_poly_lower_bound(r) == 4);
    REQUIRE(r.contributors.size() == 2);
    CHECK(r.contributors[0].reason == RequiredReason::odd_multiplicity_symmetric);
    CHECK(r.contributors[1].reason == RequiredReason::signature_jump);
    CHECK(r.contributors[1].factor == P("1;-1;1"));
  }
  SUBCASE("11n_81 polynomial as tabulated") {
    const auto delta = P("1;-3;4;-4;3;-4;4;-3;1");
    const auto f = factor(delta);
    CHECK(gc_poly_lower_bound(enhanced_required_factors(f)) == 2);
    CHECK(gc_poly_lower_bound(enhanced_required_factors(f, single_jump(kPi / 3, -4))) == 4);
  }
  SUBCASE("zero jump leaves the residual") {
    const auto f = make({{"1;-1;1", 2}, {"4;-7;4", 1}});
    const auto r = enhanced_required_factors(f, single_jump(kPi / 3, 0));
    CHECK(r.enhanced == P("4;-7;4"));
    CHECK(gc_poly_lower_bound(r) == 1);
  }
  SUBCASE("empty") {
    const auto r = enhanced_required_factors(Factorization{});
    CHECK(r.residual.is_one());
    CHECK(r.enhanced.is_one());
    CHECK(r.contributors.empty());
    CHECK(gc_poly_lower_bound(r) == 0);
  }
  SUBCASE("jump away from every root") {
    const auto f = make({{"1;-1;1", 1}});
    CHECK_THROWS_WITH_AS(enhanced_required_factors(f, single_jump(kPi / 2, 2)), "inconsistent profile", Error);
  }
  SUBCASE("profiles from Seifert matrices") {
    // 3_1 # 3_1: the signature jumps by 4, so (1-t+t^2)^2 is forced.
    const auto twice = SeifertMatrix::parse("-1,1,0,0;0,-1,0,0;0,0,-1,1;0,0,0,-1");
    const auto r1 = enhanced_required_factors(factor(alexander(twice)), signature_profile(twice));
    CHECK(r1.residual.is_one());
    CHECK(r1.enhanced == P("1;-2;3;-2;1"));
    CHECK(gc_poly_lower_bound(r1) == 2);
    // 3_1 # -3_1 is slice: the jumps cancel.
    const auto slice = SeifertMatrix::parse("-1,1,0,0;0,-1,0,0;0,0,1,-1;0,0,0,1");
    const auto r2 = enhanced_required_factors(factor(alexander(slice)), signature_profile(slice));
    CHECK(r2.enhanced.is_one());
  }
}

TEST_CASE("residual agrees with a brute-force decomposition oracle") {
  std::mt19937_64 rng(2024);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto [delta, blocks] = kcg::testing::random_palindromic(rng);
    const auto g = residual(factor(delta));
    CHECK(g == kcg::testing::oracle_min_g(delta, blocks));
    CHECK(is_symmetric(g));
    CHECK(g.degree() % 2 == 0);
    CHECK(residual(factor(g)) == g);
    const auto r = enhanced_required_factors(factor(delta));
    CHECK(r.residual.degree() <= r.enhanced.degree());
    CHECK(r.enhanced.degree() <= delta.degree());
    CHECK(divide_exact(delta, g).has_value());
    if (g.degree() < delta.degree()) ++nontrivial;
  }
  CHECK(nontrivial > 50);
}
