#include "oracles.hpp"
#include "spv/multiindex.hpp"
#include "spv/types.hpp"

#include <doctest.h>

#include <random>

using namespace spv;

TEST_CASE("degree sums entries") {
  CHECK(MultiIndex{0, 0, 0}.degree() == 0);
  CHECK(MultiIndex{2, 1}.degree() == 3);
  CHECK(degree(MultiIndex{1, 0, 4}) == 5);
  CHECK_THROWS_AS(MultiIndex({1, -1}), PreconditionError);
}

TEST_CASE("multinomial weight") {
  CHECK(multinomial_weight(MultiIndex{7}) == 1);
  CHECK(multinomial_weight(MultiIndex{1, 1}) == 2);
  CHECK(multinomial_weight(MultiIndex{2, 1}) == 3);

  SUBCASE("matches the expansion of (x_1+...+x_n)^k") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= 7; ++k)
        for (const auto& [mono, coeff] : oracle::expand_power(n, k))
          CHECK(multinomial_weight(MultiIndex(mono)) == coeff);
  }

  SUBCASE("capacity") {
    CHECK(multinomial_weight(MultiIndex{10, 10}) == 184756ULL);
    // 64!/(32!32!) ~ 1.8e18 still fits; 64!/(16!^4) does not.
    CHECK(multinomial_weight(MultiIndex{32, 32}) == 1832624140942590534ULL);
    CHECK_THROWS_AS(multinomial_weight(MultiIndex{16, 16, 16, 16}), CapacityError);
    CHECK_THROWS_AS(multinomial_weight(MultiIndex{65}), CapacityError);
  }

  SUBCASE("real-valued path agrees across the exact/log-gamma switch") {
    CHECK(multinomial_weight_real(MultiIndex{10, 10}) == 184756.0);
    const double w = multinomial_weight_real(MultiIndex{11, 11});
    CHECK(w == doctest::Approx(705432.0).epsilon(1e-12));
  }
}

TEST_CASE("multinomial theorem on random nonnegative points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const int k = trial % 7;
    std::vector<double> x(static_cast<std::size_t>(n));
    double s = 0.0;
    for (auto& xi : x) s += (xi = u(rng));
    double sum = 0.0;
    for (const auto& alpha : enumerate(n, k)) {
      double mono = 1.0;
      for (int j = 0; j < n; ++j) mono *= ipow(x[static_cast<std::size_t>(j)], alpha[j]);
      sum += multinomial_weight_real(alpha) * mono;
    }
    CHECK(sum == doctest::Approx(ipow(s, k)).epsilon(1e-12));
  }
}

TEST_CASE("sharpness factor") {
  CHECK(sharpness_factor(MultiIndex{4, 0, 0}) == 1.0);
  CHECK(sharpness_factor(MultiIndex{0, 3}) == 1.0);
  CHECK(sharpness_factor(MultiIndex{1, 1}) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(sharpness_factor(MultiIndex{2, 1}) == doctest::Approx(6.75).epsilon(1e-15));
  CHECK_THROWS_AS(sharpness_factor(MultiIndex{0, 0}), PreconditionError);

  SUBCASE("1 <= factor <= n^|v|, equality at 1 iff single axis") {
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 6; ++d)
        for (const auto& v : enumerate(n, d)) {
          const double s = sharpness_factor(v);
          int nonzero = 0;
          for (int e : v.entries()) nonzero += e > 0;
          CHECK(s >= 1.0);
          CHECK(s <= ipow(static_cast<double>(n), d) * (1 + 1e-14));
          CHECK((nonzero == 1) == (s == 1.0));
        }
  }

  SUBCASE("monotone under componentwise order") {
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 6; ++d)
        for (const auto& v : enumerate(n, d))
          for (int da = 1; da <= d; ++da)
            for (const auto& a : enumerate(n, da))
              if (a.divides(v)) CHECK(sharpness_factor(a) <= sharpness_factor(v) * (1 + 1e-14));
  }
}

TEST_CASE("enumerate") {
  const auto one = enumerate(1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == MultiIndex{3});

  const auto two = enumerate(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == MultiIndex{0, 2});
  CHECK(two[1] == MultiIndex{1, 1});
  CHECK(two[2] == MultiIndex{2, 0});

  CHECK(enumerate(3, 1).size() == 3);
  CHECK_THROWS_AS(enumerate(0, 1), PreconditionError);

  SUBCASE("count, order and content match an exhaustive scan") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= 6; ++k) {
        const auto got = enumerate(n, k);
        const auto want = oracle::brute_enumerate(n, k);
        CHECK(got.size() == static_cast<std::size_t>(binomial(n + k - 1, n - 1)));
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].entries() == want[i]);
      }
  }
}
