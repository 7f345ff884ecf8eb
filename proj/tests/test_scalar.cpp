#include "sublinear/errors.hpp"
#include "sublinear/random.hpp"
#include "sublinear/scalar.hpp"

#include "doctest.h"

#include <set>

using namespace sublinear;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/25") == Rational(3, 25));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("  7 ") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1e-3") == Rational(-1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("leading zeros are decimal, not octal") {
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("0.08") == Rational(2, 25));
  CHECK(parse_rational("09/010") == Rational(9, 10));
  CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.2.3"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1e"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("."), InvalidInput);
}

TEST_CASE("rational_from_double takes the shortest round-trip decimal") {
  CHECK(rational_from_double(0.1) == Rational(1, 10));
  CHECK(rational_from_double(-0.375) == Rational(-3, 8));
  CHECK(rational_from_double(2.0) == Rational(2));
  CHECK_THROWS_AS(rational_from_double(std::nan("")), InvalidInput);
}

TEST_CASE("format and parse round-trip") {
  for (auto x : {Rational(3, 25), Rational(-7, 3), Rational(0), Rational(12)})
    CHECK(parse_rational(format_rational(x)) == x);
  CHECK(format_rational(Rational(3, 25)) == "3/25");
}

TEST_CASE("mode names") {
  CHECK(parse_mode("rational") == Mode::Rational);
  CHECK(parse_mode("float") == Mode::Float);
  CHECK(to_string(Mode::Float) == "float");
  CHECK_THROWS_AS(parse_mode("double"), InvalidInput);
}

TEST_CASE("positive and negative parts, power") {
  CHECK(positive_part(Rational(-2)) == 0);
  CHECK(negative_part(Rational(-2)) == 2);
  CHECK(positive_part(1.5) == 1.5);
  CHECK(power(Rational(2, 3), 5) == Rational(32, 243));
  CHECK(power(Rational(5), 0) == 1);
  CHECK(power(0.5, 10) == doctest::Approx(1.0 / 1024));
}

TEST_CASE("float traits use the documented tolerances") {
  CHECK(ScalarTraits<double>::normalized(1.0 + 1e-13));
  CHECK_FALSE(ScalarTraits<double>::normalized(1.0 + 1e-9));
  CHECK(ScalarTraits<double>::equal(0.3, 0.1 + 0.2));
  CHECK_FALSE(ScalarTraits<Rational>::equal(Rational(1, 3), Rational(333333, 1000000)));
}

TEST_CASE("xorshift64* stream is deterministic and seed-sensitive") {
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  Xorshift64Star a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    if (i == 0) CHECK(x != c.next());
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("bounded draws stay in range and cover it") {
  Xorshift64Star rng(5);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    auto v = rng.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("sampling sees the same dyadic values in both modes") {
  Xorshift64Star r1(9), r2(9);
  for (int i = 0; i < 50; ++i) {
    Rational x = sample_uniform<Rational>(r1, -1, 1);
    double y = sample_uniform<double>(r2, -1, 1);
    CHECK(x.convert_to<double>() == y);
    CHECK(x >= -1);
    CHECK(x <= 1);
  }
}
