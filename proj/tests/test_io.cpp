#include <doctest.h>

#include <atomic>
#include <cmath>
#include <sstream>

#include "kinkzeta/io.hpp"

using namespace kinkzeta;

TEST_CASE("CSV round trip is exact") {
  io::Table t{{"x", "y"}, {}};
  t.add({0.1, 1.0 / 3});
  t.add({-2.5e-300, INFINITY});
  t.add({1e22, NAN});
  std::stringstream ss;
  io::write_csv(ss, t);
  const auto back = io::read_csv(ss);
  CHECK(back.columns == t.columns);
  REQUIRE(back.rows.size() == 3);
  CHECK(back.rows[0][1] == 1.0 / 3);
  CHECK(back.rows[1][0] == -2.5e-300);
  CHECK(std::isinf(back.rows[1][1]));
  CHECK(std::isnan(back.rows[2][1]));
}

TEST_CASE("grid specs") {
  const auto g = io::parse_grid("0:1:5");
  REQUIRE(g.size() == 5);
  CHECK(g[2] == 0.5);
  CHECK(g.back() == 1.0);
  CHECK_THROWS_AS(io::parse_grid("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid("a:1:3"), std::invalid_argument);
}

TEST_CASE("parallel map keeps order and propagates errors") {
  std::vector<int> in(100);
  for (int i = 0; i < 100; ++i) in[i] = i;
  const auto out = io::parallel_map(in, [](int i) { return i * i; }, 4);
  for (int i = 0; i < 100; ++i) CHECK(out[i] == i * i);
  CHECK_THROWS_AS(io::parallel_map(in, [](int i) { if (i == 57) throw std::runtime_error("x"); return i; }, 3),
                  std::runtime_error);
}

TEST_CASE("JSON table layout") {
  io::Table t{{"a"}, {{1.5}}};
  const auto j = io::table_to_json(t, {{"version", "1"}});
  CHECK(j["columns"][0] == "a");
  CHECK(j["rows"][0][0] == 1.5);
  CHECK(j["meta"]["version"] == "1");
}
