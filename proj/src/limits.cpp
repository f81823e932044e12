#include "bratteli/limits.hpp"

#include <vector>

#include "bratteli/errors.hpp"

namespace bratteli {

Count count_unbounded(std::uint32_t i, std::uint32_t j) {
  if (i > j || ((i ^ j) & 1U) != 0) return 0;
  Count b;
  mpz_bin_uiui(b.get_mpz_t(), std::uint64_t{j} + 1, (j - i) / 2);
  b *= std::uint64_t{i} + 1;
  // (j+1) always divides (i+1) binom(j+1, (j-i)/2).
  mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), std::uint64_t{j} + 1);
  return b;
}

Count catalan(std::uint32_t n) {
  Count b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * std::uint64_t{n}, n);
  mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), std::uint64_t{n} + 1);
  return b;
}

Count fibonacci(long m) {
  if (m < -1) throw DomainError("Fibonacci index " + std::to_string(m) + " is below -1");
  if (m == -1) return 1;
  Count f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return f;
}

SpecialCaseId SpecialCaseId::level(Level k) {
  if (k < 1 || k > 5)
    throw DomainError("no closed form is available for level k=" + std::to_string(k));
  SpecialCaseId id;
  id.level_ = k;
  return id;
}

Count level5_sequence(std::uint32_t m) {
  std::vector<Count> a{1, 1, 2};
  while (a.size() <= m) {
    const std::size_t n = a.size();
    a.push_back(5 * a[n - 1] - 6 * a[n - 2] + a[n - 3]);
  }
  return a[m];
}

namespace {

Count pow_ui(unsigned long base, unsigned long e) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// n = (j - i) / 2 counts the down-steps of a path to (i, j).
Count level1(std::uint32_t, std::uint32_t) { return 1; }

Count level2(std::uint32_t i, std::uint32_t j) {
  if (i == 1) return pow_ui(2, (j - 1) / 2);
  // D_2(0,0) = 1 seeds the column; the power-of-two form starts at j = 2.
  if (j == 0) return 1;
  return pow_ui(2, j / 2 - 1);
}

Count level3(std::uint32_t i, std::uint32_t j) {
  switch (i) {
    case 0: return fibonacci(static_cast<long>(j) - 1);
    case 1: return fibonacci(static_cast<long>(j));
    case 2: return fibonacci(static_cast<long>(j));
    default: return fibonacci(static_cast<long>(j) - 1);
  }
}

Count level4(std::uint32_t i, std::uint32_t j) {
  switch (i) {
    case 0:
      if (j == 0) return 1;
      return (pow_ui(3, (j - 2) / 2) + 1) / 2;
    case 1: return (pow_ui(3, (j - 1) / 2) + 1) / 2;
    case 2: return pow_ui(3, (j - 2) / 2);
    case 3: return (pow_ui(3, (j - 3) / 2 + 1) - 1) / 2;
    default: return (pow_ui(3, (j - 4) / 2 + 1) - 1) / 2;
  }
}

Count level5(std::uint32_t i, std::uint32_t j) {
  const auto a = level5_sequence;
  switch (i) {
    case 0: return a(j / 2);
    case 1: return a((j - 1) / 2 + 1);
    case 2: {
      const std::uint32_t n = (j - 2) / 2;
      return a(n + 2) - a(n + 1);
    }
    case 3: {
      const std::uint32_t n = (j - 3) / 2;
      return a(n + 3) - 2 * a(n + 2);
    }
    default: {
      const std::uint32_t n = (j - i) / 2;
      return a(n + 4) - 3 * a(n + 3) + a(n + 2);
    }
  }
}

}  // namespace

Count special_case(SpecialCaseId id, std::uint32_t i, std::uint32_t j) {
  if (id.is_unbounded()) return count_unbounded(i, j);
  const Level k = id.k();
  if (!is_reachable(k, i, j)) return 0;
  switch (k) {
    case 1: return level1(i, j);
    case 2: return level2(i, j);
    case 3: return level3(i, j);
    case 4: return level4(i, j);
    default: return level5(i, j);
  }
}

}  // namespace bratteli
