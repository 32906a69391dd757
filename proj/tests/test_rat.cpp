#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cevalat/rat.hpp"

using namespace cevalat;

TEST_CASE("rational parsing and printing") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-2").str() == "-2");
    CHECK(Rat::parse("6/4").str() == "3/2");
    CHECK(Rat::parse("0/7") == Rat(0));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse(""));
    CHECK_THROWS(Rat::parse("a"));
    CHECK_THROWS(Rat::parse("1.5"));
}

TEST_CASE("rational arithmetic") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK((-a).sign() == -1);
    CHECK(Rat(-5, 3).abs() == Rat(5, 3));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS(a / Rat(0));
}

TEST_CASE("extended ray order") {
    ExtRat inf = ExtRat::infinity();
    CHECK(ExtRat(Rat(1000000)) < inf);
    CHECK(!(inf < inf));
    CHECK(inf <= inf);
    CHECK(inf == ExtRat::parse("inf"));
    CHECK(ExtRat::parse("5/2") == ExtRat(Rat(5, 2)));
    CHECK_THROWS(ExtRat(Rat(-1)));
    CHECK(inf.str() == "inf");
}

TEST_CASE("ratio map") {
    // ratio(x, y) = x^-1 y, with ratio(0, y) = inf for y > 0
    CHECK(ratio(Rat(2), Rat(3)) == ExtRat(Rat(3, 2)));
    CHECK(ratio(Rat(5), Rat(0)) == ExtRat(Rat(0)));
    CHECK(ratio(Rat(0), Rat(7)) == ExtRat::infinity());
    CHECK_THROWS(ratio(Rat(0), Rat(0)));
}
