#include <doctest.h>

#include <random>

#include "bratteli/errors.hpp"
#include "bratteli/poly.hpp"

using namespace bratteli;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree, long magnitude) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-magnitude, magnitude);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{3, 0, -1}.str() == "3 0 -1");
  CHECK(IntPoly{}.str() == "0");
  CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
}

TEST_CASE("arithmetic") {
  const IntPoly a{1, 1}, b{-1, 1};
  CHECK(a * b == IntPoly{-1, 0, 1});
  CHECK(a + b == IntPoly{0, 2});
  CHECK(Integer(3) * a == IntPoly{3, 3});
  CHECK(a.shifted(2) == IntPoly{0, 0, 1, 1});
  CHECK(IntPoly{1, -3, 1}.substitute_square() == IntPoly{1, 0, -3, 0, 1});
  CHECK(IntPoly{0, 1, 0, 5}.compress_square(1) == IntPoly{1, 5});
  CHECK_THROWS_AS((IntPoly{1, 1}.compress_square(0)), DomainError);
  CHECK(IntPoly{1, 2, 3}.evaluate(2.0) == doctest::Approx(17.0));
  CHECK(IntPoly{1, 2, 3}.evaluate(mpq_class(1, 2)) == mpq_class(11, 4));
}

TEST_CASE("content and primitive part") {
  CHECK(IntPoly{6, -4, 10}.content() == 2);
  CHECK(IntPoly{6, -4, -10}.primitive_part() == IntPoly{-3, 2, 5});
  CHECK(IntPoly{}.content() == 0);
  CHECK_THROWS_AS((IntPoly{3, 2}.divide_exact(2)), DomainError);
}

TEST_CASE("gcd of known factorizations") {
  const IntPoly x_minus_1{-1, 1}, x_plus_2{2, 1}, two_x_plus_1{1, 2};
  CHECK(gcd(x_minus_1 * x_plus_2, x_minus_1 * two_x_plus_1) == x_minus_1);
  CHECK(gcd(IntPoly{2, 4}, IntPoly{4, 8}) == IntPoly{2, 4});
  CHECK(gcd(IntPoly{1, 1}, IntPoly{1, 0, 1}) == IntPoly{1});
  CHECK(gcd(IntPoly{}, IntPoly{-3, -6}) == IntPoly{3, 6});
  CHECK(gcd(IntPoly{}, IntPoly{}).is_zero());
}

TEST_CASE("pseudo-division identity on random inputs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly a = random_poly(rng, 9, 20);
    IntPoly b = random_poly(rng, 5, 20);
    if (b.is_zero()) continue;
    const auto [q, r] = pseudo_divmod(a, b);
    CHECK(r.degree() < b.degree());
    const long steps = std::max(0L, a.degree() - b.degree() + 1);
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(steps));
    if (a.degree() < b.degree()) scale = 1;
    CHECK(scale * a == q * b + r);
  }
}

TEST_CASE("gcd divides both inputs and recovers planted factors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const IntPoly common = random_poly(rng, 3, 6);
    const IntPoly a = common * random_poly(rng, 4, 6);
    const IntPoly b = common * random_poly(rng, 4, 6);
    if (a.is_zero() || b.is_zero()) continue;
    const IntPoly g = gcd(a, b);
    CHECK_NOTHROW(divide_exact(a, g));
    CHECK_NOTHROW(divide_exact(b, g));
    // The planted factor divides the gcd.
    CHECK_NOTHROW(divide_exact(g, common.primitive_part()));
  }
}

TEST_CASE("exact polynomial division") {
  CHECK(divide_exact(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
  CHECK_THROWS_AS(divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}), DomainError);
  CHECK_THROWS_AS(divide_exact(IntPoly{1, 1}, IntPoly{}), DomainError);
}
