#include <random>
#include <string>

#include <gtest/gtest.h>

#include "nccoop/lin.hpp"
#include "nccoop/rational.hpp"

using namespace nccoop;

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(parse_rat("1/3"), Rat(1, 3));
  EXPECT_EQ(parse_rat("2/4"), Rat(1, 2));
  EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
  EXPECT_EQ(parse_rat("7"), Rat(7));
  EXPECT_EQ(parse_rat("0/5"), Rat(0));
  EXPECT_EQ(format_rat(parse_rat("2/-4")), "-1/2");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rat("1/0"), parse_error);
  EXPECT_THROW(parse_rat(""), parse_error);
  EXPECT_THROW(parse_rat("1/"), parse_error);
  EXPECT_THROW(parse_rat("a/2"), parse_error);
  EXPECT_THROW(parse_rat("1.5"), parse_error);
  EXPECT_THROW(parse_rat("1/2/3"), parse_error);
}

TEST(Rational, FormatIsAlwaysPOverQ) {
  EXPECT_EQ(format_rat(Rat(0)), "0/1");
  EXPECT_EQ(format_rat(Rat(1)), "1/1");
  EXPECT_EQ(format_rat(Rat(1, 12)), "1/12");
  EXPECT_EQ(format_rat(Rat(-5, 3)), "-5/3");
}

TEST(Rational, FormatParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Rat r(num(rng), den(rng));
    EXPECT_EQ(parse_rat(format_rat(r)), r);
  }
}

TEST(Lin, DropsZeroCoefficients) {
  Lin<std::string> x;
  x.add("ab", Rat(1, 2));
  x.add("ba", Rat(1));
  x.add("ab", Rat(-1, 2));
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(x.coefficient("ab"), 0);
  EXPECT_EQ(x.coefficient("ba"), 1);
  x.add("zz", Rat(0));
  EXPECT_EQ(x.size(), 1u);
  x *= Rat(0);
  EXPECT_TRUE(x.empty());
}

TEST(Lin, IterationFollowsBasisOrder) {
  Lin<std::string> x;
  x.add("c", Rat(3));
  x.add("a", Rat(1));
  x.add("b", Rat(2));
  std::string order;
  for (const auto& [b, c] : x) order += b;
  EXPECT_EQ(order, "abc");
}

TEST(Lin, VectorSpaceLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), basis(0, 4);
  auto random_lin = [&] {
    Lin<int> x;
    for (int i = 0; i < 4; ++i) x.add(basis(rng), Rat(coeff(rng), 2));
    return x;
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random_lin(), b = random_lin(), c = random_lin();
    const Rat s(coeff(rng), 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).empty());
    EXPECT_EQ(s * (a + b), s * a + s * b);
  }
}

TEST(Lin, MapLinearExtendsBasisMaps) {
  Lin<int> x;
  x.add(1, Rat(2));
  x.add(2, Rat(3));
  // Collapse everything onto one basis element.
  auto collapsed = x.map_linear([](int) { return std::string("e"); });
  EXPECT_EQ(collapsed.coefficient("e"), 5);
  // A basis element may map to a linear combination.
  auto doubled = x.map_linear([](int b) {
    Lin<int> out;
    out.add(b, Rat(1));
    out.add(b + 10, Rat(-1));
    return out;
  });
  EXPECT_EQ(doubled.coefficient(1), 2);
  EXPECT_EQ(doubled.coefficient(11), -2);
  EXPECT_EQ(doubled.coefficient(12), -3);
}
