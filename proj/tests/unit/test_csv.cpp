#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "etau/csv.hpp"

using namespace etau;

TEST_SUITE("csv") {
  TEST_CASE("header and round trip") {
    std::ostringstream out;
    csv::write_header(out, "demo", {"a", "b"});
    CHECK(out.str() == "# etau-csv schema=demo version=1\na,b\n");
    for (double x : {0.1, -1e-300, 1.0 / 3.0, 6.02214076e23, 0.0}) CHECK(csv::parse_num(csv::num(x)) == x);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(csv::num(inf) == "inf");
    CHECK(csv::num(-inf) == "-inf");
    CHECK(csv::parse_num("inf") == inf);
    CHECK(std::isnan(csv::parse_num(csv::num(std::nan("")))));
    CHECK_THROWS_AS(csv::parse_num("1.5x"), std::invalid_argument);
    CHECK_THROWS_AS(csv::parse_num(""), std::invalid_argument);
    const auto f = csv::split_row("1,2,,x");
    REQUIRE(f.size() == 4);
    CHECK(f[2].empty());
    CHECK(f[3] == "x");
  }
}
