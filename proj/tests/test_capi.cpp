#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "bratteli/bratteli.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { bratteli_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

std::string count(bratteli_backend b, uint32_t k, uint32_t i, uint32_t j) {
  Owned s;
  REQUIRE(bratteli_count(b, k, i, j, nullptr, &s.p) == BRATTELI_OK);
  return s.str();
}

const bratteli_backend kAll[] = {BRATTELI_BACKEND_DP, BRATTELI_BACKEND_DYCK, BRATTELI_BACKEND_GF,
                                 BRATTELI_BACKEND_SPECTRAL, BRATTELI_BACKEND_MATRIX};

}  // namespace

TEST_CASE("every backend answers the same") {
  for (auto b : kAll) {
    CHECK(count(b, 5, 0, 12) == "131");
    CHECK(count(b, 4, 3, 5) == "4");
    CHECK(count(b, 3, 2, 8) == "21");
    CHECK(count(b, 2, 3, 5) == "0");
    CHECK(count(b, 2, 1, 4) == "0");
  }
}

TEST_CASE("large counts stay exact") {
  CHECK(count(BRATTELI_BACKEND_DP, 2, 1, 199) == "633825300114114700748351602688");
  CHECK(count(BRATTELI_BACKEND_SPECTRAL, 12, 0, 300) == count(BRATTELI_BACKEND_MATRIX, 12, 0, 300));
}

TEST_CASE("error codes and messages") {
  Owned s;
  CHECK(bratteli_count(BRATTELI_BACKEND_DYCK, 5, 0, 28, nullptr, &s.p) == BRATTELI_ERR_DOMAIN);
  CHECK(std::strlen(bratteli_last_error()) > 0);
  CHECK(s.p == nullptr);

  bratteli_count_options opts;
  bratteli_count_options_init(&opts);
  opts.dyck_budget = 10;
  CHECK(bratteli_count(BRATTELI_BACKEND_DYCK, 5, 0, 20, &opts, &s.p) == BRATTELI_ERR_BUDGET);
  CHECK(std::string(bratteli_last_error()).find("k=5") != std::string::npos);

  CHECK(bratteli_count(static_cast<bratteli_backend>(42), 1, 1, 1, nullptr, &s.p) ==
        BRATTELI_ERR_ARGUMENT);
  CHECK(bratteli_count(BRATTELI_BACKEND_DP, 1, 1, 1, nullptr, nullptr) == BRATTELI_ERR_ARGUMENT);

  bratteli_table* t = nullptr;
  CHECK(bratteli_table_build(4, 100, 10, &t) == BRATTELI_ERR_RESOURCE);
  CHECK(t == nullptr);
  CHECK(bratteli_table_from_json("{", &t) == BRATTELI_ERR_PARSE);

  bratteli_gf* g = nullptr;
  CHECK(bratteli_gf_create(BRATTELI_GF_CLOSED, 3, 5, &g) == BRATTELI_ERR_DOMAIN);
  CHECK(bratteli_gf_create(static_cast<bratteli_gf_form>(7), 3, 1, &g) == BRATTELI_ERR_ARGUMENT);

  CHECK(std::string(bratteli_status_name(BRATTELI_ERR_PRECISION)).size() > 0);
  CHECK(std::string(bratteli_version()) == "1.0.0");

  REQUIRE(bratteli_count(BRATTELI_BACKEND_DP, 1, 1, 1, nullptr, &s.p) == BRATTELI_OK);
  CHECK(std::string(bratteli_last_error()).empty());
}

TEST_CASE("degrees, special cases, factorization") {
  uint32_t in = 9, outd = 9;
  REQUIRE(bratteli_degrees(3, 1, 3, &in, &outd) == BRATTELI_OK);
  CHECK(in == 2);
  CHECK(outd == 2);
  CHECK(bratteli_degrees(3, 1, 2, &in, &outd) == BRATTELI_ERR_DOMAIN);

  Owned a, b, f;
  REQUIRE(bratteli_special_case(4, 3, 5, &a.p) == BRATTELI_OK);
  CHECK(a.str() == "4");
  REQUIRE(bratteli_special_case(BRATTELI_LEVEL_UNBOUNDED, 0, 6, &b.p) == BRATTELI_OK);
  CHECK(b.str() == "5");
  CHECK(bratteli_special_case(6, 0, 6, &b.p) == BRATTELI_ERR_DOMAIN);

  REQUIRE(bratteli_factorize("uudud", 2, &f.p) == BRATTELI_OK);
  CHECK(f.str() == "|udud");
  CHECK(bratteli_factorize("uuu", 2, &f.p) == BRATTELI_ERR_DOMAIN);
  CHECK(bratteli_factorize("uxd", 2, &f.p) == BRATTELI_ERR_DOMAIN);
}

TEST_CASE("tables through the API") {
  bratteli_table* t = nullptr;
  REQUIRE(bratteli_table_build(3, 20, 0, &t) == BRATTELI_OK);
  CHECK(bratteli_table_k(t) == 3);
  CHECK(bratteli_table_jmax(t) == 20);
  Owned v, missing, json, csv;
  REQUIRE(bratteli_table_lookup(t, 2, 8, &v.p) == BRATTELI_OK);
  CHECK(v.str() == "21");
  REQUIRE(bratteli_table_lookup(t, 2, 7, &missing.p) == BRATTELI_OK);
  CHECK(missing.str() == "0");
  REQUIRE(bratteli_table_render(t, BRATTELI_FORMAT_JSON, &json.p) == BRATTELI_OK);
  REQUIRE(bratteli_table_render(t, BRATTELI_FORMAT_CSV, &csv.p) == BRATTELI_OK);
  CHECK(csv.str().rfind("j,i,count\n", 0) == 0);

  bratteli_table* back = nullptr;
  REQUIRE(bratteli_table_from_json(json.p, &back) == BRATTELI_OK);
  CHECK(bratteli_table_equal(t, back) == 1);
  CHECK(bratteli_table_size(back) == bratteli_table_size(t));
  CHECK(bratteli_table_equal(t, nullptr) == 0);
  bratteli_table_free(back);
  bratteli_table_free(t);
  bratteli_table_free(nullptr);
}

TEST_CASE("generating functions through the API") {
  bratteli_gf* closed = nullptr;
  bratteli_gf* product = nullptr;
  REQUIRE(bratteli_gf_create(BRATTELI_GF_CLOSED, 5, 0, &closed) == BRATTELI_OK);
  REQUIRE(bratteli_gf_create(BRATTELI_GF_PRODUCT, 5, 0, &product) == BRATTELI_OK);
  CHECK(bratteli_gf_equal(closed, product) == 1);

  unsigned shift = 9;
  bratteli_gf* even = nullptr;
  REQUIRE(bratteli_gf_even(closed, &shift, &even) == BRATTELI_OK);
  CHECK(shift == 0);
  Owned num, den, series, coeffs, initial;
  REQUIRE(bratteli_gf_numerator(even, &num.p) == BRATTELI_OK);
  REQUIRE(bratteli_gf_denominator(even, &den.p) == BRATTELI_OK);
  CHECK(num.str() == "1 -4 3");
  CHECK(den.str() == "1 -5 6 -1");
  REQUIRE(bratteli_gf_series(even, 6, &series.p) == BRATTELI_OK);
  CHECK(series.str() == "1 1 2 5 14 42 131");
  size_t order = 0;
  REQUIRE(bratteli_gf_recurrence(even, &order, &coeffs.p, &initial.p) == BRATTELI_OK);
  CHECK(order == 3);
  CHECK(coeffs.str() == "5 -6 1");
  CHECK(initial.str() == "1 1 2");

  bratteli_gf* r = nullptr;
  REQUIRE(bratteli_gf_r(3, &r) == BRATTELI_OK);
  Owned rn, rd;
  REQUIRE(bratteli_gf_numerator(r, &rn.p) == BRATTELI_OK);
  REQUIRE(bratteli_gf_denominator(r, &rd.p) == BRATTELI_OK);
  CHECK(rn.str() == "1 -1");
  CHECK(rd.str() == "1 -2");

  bratteli_gf_free(r);
  bratteli_gf_free(even);
  bratteli_gf_free(product);
  bratteli_gf_free(closed);
}

TEST_CASE("residues and rates through the API") {
  bratteli_spectral* s = nullptr;
  REQUIRE(bratteli_residues(3, 0, 128, &s) == BRATTELI_OK);
  CHECK(bratteli_spectral_size(s) == 4);
  Owned w, p, sum;
  REQUIRE(bratteli_spectral_term(s, 1, 10, &w.p, &p.p) == BRATTELI_OK);
  CHECK(p.str() == "1.618033989");
  CHECK(bratteli_spectral_term(s, 0, 10, &w.p, &p.p) == BRATTELI_ERR_DOMAIN);
  CHECK(bratteli_spectral_term(s, 5, 10, &w.p, &p.p) == BRATTELI_ERR_DOMAIN);
  REQUIRE(bratteli_spectral_weight_sum(s, 20, &sum.p) == BRATTELI_OK);
  CHECK(sum.str().rfind("1.0000000000000000000", 0) == 0);
  bratteli_spectral_free(s);
  CHECK(bratteli_residues(3, 0, 1L << 30, &s) == BRATTELI_ERR_DOMAIN);

  Owned g, e, d;
  REQUIRE(bratteli_growth_rate(3, 128, 10, &g.p) == BRATTELI_OK);
  CHECK(g.str() == "1.618033989");
  REQUIRE(bratteli_empirical_rate(3, 0, 200, 256, 10, &e.p, &d.p) == BRATTELI_OK);
  CHECK(e.str() == "1.618033989");
  CHECK(bratteli_empirical_rate(3, 0, 1, 256, 10, &e.p, nullptr) == BRATTELI_ERR_DOMAIN);
}

TEST_CASE("concurrent calls are independent") {
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t n = 0; n < results.size(); ++n)
    threads.emplace_back([n, &results] {
      char* out = nullptr;
      const auto backend = kAll[n % 5];
      if (bratteli_count(backend, 6, 0, 24, nullptr, &out) == BRATTELI_OK) results[n] = out;
      bratteli_string_free(out);
      char* bad = nullptr;
      bratteli_count(BRATTELI_BACKEND_DYCK, 6, 0, 30, nullptr, &bad);
    });
  for (auto& t : threads) t.join();
  const std::string expected = count(BRATTELI_BACKEND_DP, 6, 0, 24);
  for (const auto& r : results) CHECK(r == expected);
}
