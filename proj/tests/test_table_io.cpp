#include <doctest.h>

#include "bratteli/errors.hpp"
#include "bratteli/table_io.hpp"

using namespace bratteli;

TEST_CASE("csv layout") {
  const std::string csv = table_to_csv(build_table(2, 4));
  CHECK(csv == "j,i,count\n0,0,1\n1,1,1\n2,0,1\n2,2,1\n3,1,2\n4,0,2\n4,2,2\n");
}

TEST_CASE("json layout keeps counts as strings") {
  CHECK(table_to_json(build_table(0, 2)) ==
        "{\"k\":0,\"jmax\":2,\"entries\":[{\"i\":0,\"j\":0,\"count\":\"1\"}]}\n");
  const auto big = table_to_json(build_table(2, 200));
  CHECK(big.find("\"count\":\"633825300114114700748351602688\"") != std::string::npos);
}

TEST_CASE("json round trip") {
  for (Level k : {0U, 1U, 2U, 5U, 9U})
    for (std::uint32_t jmax : {0U, 1U, 7U, 64U}) {
      const auto t = build_table(k, jmax);
      CHECK(table_from_json(table_to_json(t)) == t);
    }
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(table_from_json("not json"), ParseError);
  CHECK_THROWS_AS(table_from_json("[]"), ParseError);
  CHECK_THROWS_AS(table_from_json(R"({"k":-1,"jmax":0,"entries":[]})"), ParseError);
  CHECK_THROWS_AS(table_from_json(R"({"k":0,"jmax":0})"), ParseError);
  CHECK_THROWS_AS(table_from_json(R"({"k":0,"jmax":0,"entries":[]})"), ParseError);
  CHECK_THROWS_AS(table_from_json(R"({"k":0,"jmax":0,"entries":[{"i":0,"j":0,"count":1}]})"), ParseError);
  CHECK_THROWS_AS(table_from_json(R"({"k":0,"jmax":0,"entries":[{"i":0,"j":0,"count":"2"}]})"), ParseError);
  CHECK_THROWS_AS(table_from_json(R"({"k":0,"jmax":0,"entries":[{"i":0,"j":0,"count":"-1"}]})"), ParseError);
  CHECK_NOTHROW(table_from_json(R"({"k":0,"jmax":0,"entries":[{"i":0,"j":0,"count":"1"}]})"));
}

TEST_CASE("pretty layout") {
  const std::string expected =
      "i=2 |     1   2\n"
      "i=1 |   1   2\n"
      "i=0 | 1   1   2\n"
      "    +----------\n"
      "      0 1 2 3 4  (j)\n";
  CHECK(table_to_pretty(build_table(2, 4), false) == expected);
  const auto colored = table_to_pretty(build_table(2, 4), true);
  CHECK(colored.find("\x1b[1;36m2\x1b[0m") != std::string::npos);
}
