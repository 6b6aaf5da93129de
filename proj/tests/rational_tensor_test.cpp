#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "generators.hpp"
#include "plk/error.hpp"
#include "plk/tensor.hpp"

namespace plk {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Scalar(3));
  EXPECT_EQ(parse_rational("-7"), Scalar(-7));
  EXPECT_EQ(parse_rational("2/4"), Scalar(1, 2));
  EXPECT_EQ(parse_rational("-6/4"), Scalar(-3, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Scalar(mpz_class("123456789012345678901234567890")));
}

TEST(Rational, RejectsNonRationalText) {
  for (const char* bad : {"", "1.5", "1/0", "abc", "1/", "/2", "1/-2", "1e3", " 1"}) {
    EXPECT_EQ(kind_of([&] { parse_rational(bad); }), ErrorKind::NonRationalValue) << bad;
  }
}

TEST(Rational, FormatRoundTrips) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Scalar v = testing::random_rational(rng);
    EXPECT_EQ(parse_rational(format_rational(v)), v);
  }
  EXPECT_EQ(format_rational(Scalar(4, 2)), "2");
  EXPECT_EQ(format_rational(Scalar(-1, 3)), "-1/3");
}

TEST(Tensor, IndexingIsRowMajor) {
  Tensor t(3, 2);
  t(1, 0, 1) = 5;
  EXPECT_EQ(t.flat()[5], Scalar(5));
  EXPECT_EQ(t.unravel(5), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(t.nonzero_count(), 1u);
  EXPECT_EQ(*t.first_nonzero(), (std::vector<std::size_t>{1, 0, 1}));
}

TEST(Tensor, PermutedMovesAxes) {
  Tensor t(3, 3);
  t(0, 1, 2) = 7;
  const std::vector<std::size_t> perm{1, 2, 0};
  const Tensor p = t.permuted(perm);
  // p(i0, i1, i2) = t(i1, i2, i0), so p(2, 0, 1) = t(0, 1, 2).
  EXPECT_EQ(p(2, 0, 1), Scalar(7));
  EXPECT_EQ(p.nonzero_count(), 1u);
}

TEST(Tensor, PermutationSumMatchesExplicitSum) {
  std::mt19937_64 rng(11);
  Tensor t(4, 3);
  for (auto& v : t.flat()) v = testing::random_rational(rng);
  const std::vector<std::vector<std::size_t>> perms = {{0, 1, 2, 3}, {1, 2, 0, 3}, {3, 0, 2, 1}};
  Tensor expected(4, 3);
  for (const auto& p : perms) expected += t.permuted(p);
  EXPECT_EQ(t.permutation_sum(perms), expected);
}

TEST(Tensor, RejectsBadPermutationsAndShapes) {
  Tensor t(2, 2);
  const std::vector<std::size_t> repeated{0, 0};
  EXPECT_EQ(kind_of([&] { t.permuted(repeated); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { t += Tensor(3, 2); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { Tensor huge(12, 100); }), ErrorKind::SizeGuardExceeded);
}

TEST(RationalMatrix, ProductAndTranspose) {
  RationalMatrix a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = Scalar(1, 2);
  a(1, 1) = -2;
  RationalMatrix b = a.transposed();
  RationalMatrix c = a * b;
  EXPECT_EQ(c(0, 0), Scalar(5, 4));
  EXPECT_EQ(c(1, 1), Scalar(4));
  EXPECT_TRUE(c(0, 1) == 0);
  EXPECT_TRUE((c - c.transposed()).is_zero());
}

}  // namespace
}  // namespace plk
