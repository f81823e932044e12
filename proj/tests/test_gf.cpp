#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bratteli/diagram.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/gf.hpp"
#include "bratteli/real.hpp"

using namespace bratteli;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

// Cross-multiplied equality of two fractions, independent of reduction.
bool same_function(const RationalGF& a, const RationalGF& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace

TEST_CASE("chebyshev_u examples") {
  CHECK(chebyshev_u(0) == IntPoly{1});
  CHECK(chebyshev_u(1) == IntPoly{0, 2});
  CHECK(chebyshev_u(2) == IntPoly{-1, 0, 4});
  const double theta = std::numbers::pi / 7;
  CHECK(chebyshev_u(5).evaluate(std::cos(theta)) ==
        doctest::Approx(std::sin(6 * theta) / std::sin(theta)).epsilon(1e-12));
}

TEST_CASE("chebyshev_u satisfies the trigonometric definition") {
  for (std::size_t r = 0; r <= 20; ++r)
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
      const double lhs = chebyshev_u(r).evaluate(std::cos(theta)) * std::sin(theta);
      CHECK(lhs == doctest::Approx(std::sin((static_cast<double>(r) + 1) * theta)).epsilon(1e-9));
    }
}

TEST_CASE("chebyshev three-term recurrence holds coefficientwise") {
  const IntPoly two_x{0, 2};
  for (std::size_t r = 1; r < 40; ++r)
    CHECK(chebyshev_u(r + 1) == two_x * chebyshev_u(r) - chebyshev_u(r - 1));
}

TEST_CASE("u_hat examples") {
  CHECK(u_hat(0) == IntPoly{1});
  CHECK(u_hat(6) == IntPoly{1, 0, -5, 0, 6, 0, -1});
  const double x = 1.0 / 3.0;
  CHECK(u_hat(9).evaluate(x) == doctest::Approx(std::pow(x, 9) * chebyshev_u(9).evaluate(1.5)).epsilon(1e-12));
}

TEST_CASE("u_hat is the reversal of U_m at 1/(2x)") {
  // x^m U_m(1/(2x)) = sum_n c_n 2^{-n} x^{m-n}.
  for (std::size_t m = 0; m <= 30; ++m) {
    const IntPoly um = chebyshev_u(m);
    const auto& u = um.coeffs();
    std::vector<Integer> rev(m + 1);
    for (std::size_t n = 0; n < u.size(); ++n) {
      Integer c = u[n];
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 1UL << n);
      rev[m - n] = c;
    }
    CHECK(u_hat(m) == IntPoly(rev));
  }
}

TEST_CASE("u_hat recurrence, m <= 64") {
  const IntPoly x2{0, 0, 1};
  for (std::size_t m = 1; m <= 64; ++m) {
    CHECK(u_hat(m + 1) == u_hat(m) - x2 * u_hat(m - 1));
    CHECK(u_hat(m)[0] == 1);
  }
}

TEST_CASE("r_k examples") {
  CHECK(r_k(0) == RationalGF(IntPoly{}, IntPoly{1}));
  CHECK(r_k(1) == RationalGF(IntPoly{1}, IntPoly{1}));
  CHECK(r_k(2) == RationalGF(IntPoly{1}, IntPoly{1, -1}));
  CHECK(r_k(5) == RationalGF(IntPoly{1, -3, 1}, IntPoly{1, -4, 3}));
}

TEST_CASE("continued-fraction law R_{k+1} = 1/(1 - x R_k), k <= 32") {
  const RationalGF one(IntPoly{1}, IntPoly{1});
  for (Level k = 0; k <= 32; ++k) CHECK(r_k(k + 1) == (one - r_k(k).shifted(1)).reciprocal());
}

TEST_CASE("R_k counts Dyck paths of height below k") {
  // Height < 3 Dyck paths of semilength n: 1,1,2,4,8,...
  CHECK(series_coeffs(r_k(3), 5) == ints({1, 1, 2, 4, 8, 16}));
}

TEST_CASE("gf_product examples") {
  CHECK(gf_product(2, 0) == RationalGF(IntPoly{1, 0, -1}, IntPoly{1, 0, -2}));
  CHECK(gf_product(1, 1) == RationalGF(IntPoly{0, 1}, IntPoly{1, 0, -1}));
  CHECK(gf_product(5, 0) == RationalGF(IntPoly{1, 0, -4, 0, 3}, IntPoly{1, 0, -5, 0, 6, 0, -1}));
  CHECK_THROWS_AS(gf_product(2, 3), DomainError);
}

TEST_CASE("gf_closed examples") {
  CHECK(gf_closed(3, 3) == RationalGF(IntPoly{0, 0, 0, 1}, IntPoly{1, 0, -3, 0, 1}));
  CHECK(gf_closed(2, 0) == gf_product(2, 0));
  CHECK(gf_closed(0, 0) == RationalGF(IntPoly{1}, IntPoly{1}));
  CHECK_THROWS_AS(gf_closed(0, 1), DomainError);
  // Uhat_2 and Uhat_5 share the factor 1 - x^2, which must cancel.
  CHECK(gf_closed(4, 2) == RationalGF(IntPoly{0, 0, 1}, IntPoly{1, 0, -3}));
  CHECK(gf_closed(4, 2).den() == IntPoly{1, 0, -3});
}

TEST_CASE("product and closed forms coincide, 0 <= i <= k <= 10") {
  for (Level k = 0; k <= 10; ++k)
    for (std::uint32_t i = 0; i <= k; ++i) {
      const auto p = gf_product(k, i), c = gf_closed(k, i);
      CHECK(p == c);
      CHECK(same_function(p, c));
    }
}

TEST_CASE("series_coeffs examples") {
  CHECK(series_coeffs(gf_closed(2, 1), 7) == ints({0, 1, 0, 2, 0, 4, 0, 8}));
  CHECK(series_coeffs(gf_closed(3, 0), 10) == ints({1, 0, 1, 0, 2, 0, 5, 0, 13, 0, 34}));
  CHECK(series_coeffs(RationalGF(IntPoly{1}, IntPoly{1}), 3) == ints({1, 0, 0, 0}));
  CHECK(series_coeffs(gf_closed(3, 3), 9) == ints({0, 0, 0, 1, 0, 3, 0, 8, 0, 21}));
}

TEST_CASE("series_coeffs flags negative counts") {
  const RationalGF g(IntPoly{1, -2}, IntPoly{1});
  CHECK_THROWS_AS(series_coeffs(g, 2), IntegralityError);
  CHECK(series_coeffs(g, 2, Expansion::Signed) == ints({1, -2, 0}));
}

TEST_CASE("series equals the column recurrence, 0 <= i <= k <= 10, j <= 200") {
  for (Level k = 0; k <= 10; ++k)
    for (std::uint32_t i = 0; i <= k; ++i) {
      const auto c = series_coeffs(gf_closed(k, i), 200);
      for (std::uint32_t j = 0; j <= 200; ++j) CHECK(c[j] == count_dp({k, i, j}));
    }
}

TEST_CASE("count_gf") {
  CHECK(count_gf({3, 1, 11}) == 89);
  CHECK(count_gf({2, 5, 7}) == 0);
}

TEST_CASE("recurrence_from_gf examples") {
  SUBCASE("k=5 in t = x^2") {
    const auto form = even_form(gf_closed(5, 0));
    CHECK(form.shift == 0);
    const auto rec = recurrence_from_gf(form.compressed);
    CHECK(rec.order == 3);
    CHECK(rec.coeffs == ints({5, -6, 1}));
    CHECK(rec.initial == ints({1, 1, 2}));
  }
  SUBCASE("k=2 in t = x^2 applies from m = 2") {
    const auto rec = recurrence_from_gf(even_form(gf_closed(2, 0)).compressed);
    CHECK(rec.order == 1);
    CHECK(rec.coeffs == ints({2}));
    CHECK(rec.initial == ints({1, 1}));
    CHECK(rec.replay(5) == ints({1, 1, 2, 4, 8, 16}));
  }
  SUBCASE("geometric series") {
    const auto rec = recurrence_from_gf(RationalGF(IntPoly{1}, IntPoly{1, -1}));
    CHECK(rec.order == 1);
    CHECK(rec.coeffs == ints({1}));
    CHECK(rec.initial == ints({1}));
  }
  SUBCASE("polynomial") {
    const auto rec = recurrence_from_gf(RationalGF(IntPoly{1}, IntPoly{1}));
    CHECK(rec.order == 0);
    CHECK(rec.replay(3) == ints({1, 0, 0, 0}));
  }
}

TEST_CASE("replayed recurrences reproduce every series") {
  for (Level k = 0; k <= 10; ++k)
    for (std::uint32_t i = 0; i <= k; ++i) {
      const auto g = gf_closed(k, i);
      CHECK(recurrence_from_gf(g).replay(120) == series_coeffs(g, 120));
      const auto e = even_form(g);
      CHECK(e.shift == i % 2);
      CHECK(recurrence_from_gf(e.compressed).replay(60) == series_coeffs(e.compressed, 60));
    }
}

TEST_CASE("even_form rejects mixed parity") {
  CHECK_THROWS_AS(even_form(RationalGF(IntPoly{1, 1}, IntPoly{1})), DomainError);
  CHECK_THROWS_AS(even_form(RationalGF(IntPoly{1}, IntPoly{1, -1})), DomainError);
}

TEST_CASE("RationalGF normalization") {
  CHECK(RationalGF(IntPoly{-2, 2}, IntPoly{-1, 1}) == RationalGF(IntPoly{2}, IntPoly{1}));
  CHECK(RationalGF(IntPoly{2}, IntPoly{-1}) == RationalGF(IntPoly{-2}, IntPoly{1}));
  CHECK_THROWS_AS(RationalGF(IntPoly{1}, IntPoly{0, 1}), DomainError);
  CHECK_THROWS_AS(RationalGF(IntPoly{1}, IntPoly{2, 1}), DomainError);
}

TEST_CASE("poles of the closed form sit at 1/(2 cos(r pi/(k+2)))") {
  const Bits bits = 128;
  for (Level k = 0; k <= 12; ++k)
    for (std::uint32_t r = 1; r <= k + 1; ++r) {
      if (2 * r == k + 2) continue;  // cos = 0: pole at infinity
      const Real c = cos(Real::pi(bits) * static_cast<long>(r) / static_cast<long>(k + 2));
      const Real x = Real(1L, bits) / (c * 2L);
      CHECK(abs(evaluate(u_hat(k + 1), x)).to_double() < 1e-25);
    }
}
