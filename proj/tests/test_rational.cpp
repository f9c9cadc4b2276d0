#include <doctest.h>

#include <stdexcept>

#include "wordrank/rational.hpp"

using namespace wordrank;

TEST_CASE("BigRational canonical form and arithmetic") {
  CHECK(BigRational(6, 4) == BigRational(3, 2));
  CHECK(BigRational(-6, -4) == BigRational(3, 2));
  CHECK(BigRational(6, -4).str() == "-3/2");
  CHECK(BigRational(0, 5).str() == "0");
  CHECK((BigRational(1, 3) + BigRational(1, 6)).str() == "1/2");
  CHECK((BigRational(2, 3) * BigRational(3, 4)) == BigRational(1, 2));
  CHECK((BigRational(1) / BigRational(3)).str() == "1/3");
  CHECK((-BigRational(1, 2)).sign() == -1);
  CHECK(BigRational(5, 1).is_integer());
  CHECK_FALSE(BigRational(5, 2).is_integer());
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("BigRational string round trip") {
  for (const char* s : {"0", "1", "-7", "9/4", "-22/7", "123456789012345678901234567891/7"})
    CHECK(BigRational(std::string(s)).str() == s);
  CHECK(BigRational(std::string("6/4")).str() == "3/2");
  CHECK_THROWS_AS(BigRational(std::string("x")), std::invalid_argument);
}

TEST_CASE("BigRational large values stay exact") {
  BigRational big(1);
  for (int i = 0; i < 40; ++i) big *= BigRational(10);
  BigRational third = big / BigRational(3);
  CHECK(third * BigRational(3) == big);
}
