#include "support.h"

#include "patrol/error.h"

using namespace patrol;
using testing::Q;

TEST_CASE("parse decimals and fractions exactly") {
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational(".125") == Rational(1, 8));
    CHECK(parse_rational("5/3") == Rational(5, 3));
    CHECK(parse_rational("-7/12") == Rational(-7, 12));
    CHECK(parse_rational("4/2") == 2);
    CHECK(parse_rational("0.1") * 10 == 1);
    CHECK(parse_rational("+3") == 3);
}

TEST_CASE("malformed numbers are rejected") {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", ".", "1e3", "--1", "1/-2"}) {
        CAPTURE(bad);
        try {
            parse_rational(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
}

TEST_CASE("canonical string forms") {
    CHECK(to_string(Q("10/4")) == "5/2");
    CHECK(to_string(Q("3")) == "3");
    CHECK(to_string(Q("-0.25")) == "-1/4");
    CHECK(to_decimal(Q("1/3")) == "0.3333333333333333");
    CHECK(to_decimal(Q("1/2")) == "0.5");
}

TEST_CASE("lcm of rational periods") {
    CHECK(rational_lcm(Q("2/3"), Q("1/2")) == 2);
    CHECK(rational_lcm(Q("5/3"), Q("5/3")) == Q("5/3"));
    CHECK(rational_lcm(Q("4/3"), Q("2")) == 4);
    // brute force: smallest common integer multiple
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int p = 1; p <= 5; ++p)
                for (int q = 1; q <= 5; ++q) {
                    Rational x(a, p), y(b, q);
                    x.canonicalize();
                    y.canonicalize();
                    Rational l = rational_lcm(x, y);
                    CHECK(testing::is_integer(l / x));
                    CHECK(testing::is_integer(l / y));
                    for (int k = 1; Rational(k) * x < l; ++k) CHECK_FALSE(testing::is_integer(Rational(k) * x / y));
                }
}

TEST_CASE("floor division") {
    CHECK(floor_div(Q("7/2"), Q("1")) == 3);
    CHECK(floor_div(Q("-1/2"), Q("1")) == -1);
    CHECK(floor_div(Q("10/3"), Q("5/3")) == 2);
}
