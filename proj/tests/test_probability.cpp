#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hangword/errors.hpp"
#include "hangword/probability.hpp"

using namespace hangword;

namespace {
  // Pascal's triangle, independent of the library's binomial.
  class Pascal {
   public:
    explicit Pascal(int n) : _rows(n + 1) {
      for (int i = 0; i <= n; ++i) {
        _rows[i].assign(i + 1, BigInt(1));
        for (int j = 1; j < i; ++j) {
          _rows[i][j] = _rows[i - 1][j - 1] + _rows[i - 1][j];
        }
      }
    }
    BigInt operator()(int n, int r) const {
      return r < 0 || r > n ? BigInt(0) : _rows[n][r];
    }

   private:
    std::vector<std::vector<BigInt>> _rows;
  };

  Pascal const pascal(40);

  // Some index <= k-1 among m distinct uniform picks.
  Rational hang_oracle(int n, int k, int m) {
    return 1 - Rational(pascal(n - k + 1, m), pascal(n, m));
  }

  // Every pick > k.
  Rational fall_oracle(int n, int k, int m) {
    return Rational(pascal(n - k, m), pascal(n, m));
  }

  // The majority rule written out: three failures or two of three.
  Rational majority_oracle(Rational const& p) {
    return p * p * p + 3 * p * p * (1 - p);
  }

  std::vector<Rational> grid() {
    std::vector<Rational> out;
    for (int i = 1; i <= 1000; ++i) {
      out.emplace_back(i, 2000);
    }
    return out;
  }
}  // namespace

TEST_CASE("p_step") {
  CHECK(p_step(Rational(1, 2)) == Rational(1, 2));
  CHECK(p_step(Rational(0)) == 0);
  CHECK(p_step(Rational(1)) == 1);
  CHECK(p_step(Rational(1, 4)) == Rational(5, 32));
  CHECK(p_step(0.25) == doctest::Approx(5.0 / 32));
  for (auto const& p : grid()) {
    REQUIRE(p_step(p) == majority_oracle(p));
  }
  CHECK_THROWS_AS(p_step(Rational(-1, 3)), InputError);
  CHECK_THROWS_AS(p_step(Rational(4, 3)), InputError);
  CHECK_THROWS_AS(p_step(1.5), InputError);
}

TEST_CASE("p0_majority") {
  CHECK(p0_majority(3) == Rational(1, 3));
  CHECK(p0_majority(5) == Rational(2, 5));
  CHECK(p0_majority(1) == 0);
  CHECK_THROWS_AS(p0_majority(4), InputError);
}

TEST_CASE("ratio lemma factorisation") {
  for (auto const& p : grid()) {
    Rational lhs = 2 * p * (Rational(1, 2) - 3 * p * p + 2 * p * p * p)
                   - 3 * (Rational(1, 2) - p) * (3 * p * p - 2 * p * p * p);
    Rational half = p - Rational(1, 2);
    REQUIRE(lhs == 2 * p * (2 - p) * half * half);

    Rational next = p_step(p);
    REQUIRE((Rational(1, 2) - next) / next
            >= Rational(3, 2) * (Rational(1, 2) - p) / p);
  }
}

TEST_CASE("squaring lemma") {
  for (int i = 0; i <= 1000; ++i) {
    Rational p(i, 1000);
    REQUIRE(3 * p_step(p) <= (3 * p) * (3 * p));
  }
}

// Written with the ratio growing from 1/n: p_0 = 1/2 - 1/(2n) gives a
// starting ratio of 1/(n - 1), so that is the bound that holds and the one
// that yields (3/2)^d <= n whenever p_d >= 1/4.
TEST_CASE("inductive bound for the majority initializer") {
  for (int n = 3; n <= 41; n += 2) {
    FailureTracker tracker(p0_majority(n));
    Rational       start  = (Rational(1, 2) - *tracker.exact(0)) / *tracker.exact(0);
    Rational       growth = Rational(1, n);
    Rational       factor = 1;
    for (std::size_t d = 0; d <= 6; ++d) {
      auto p = tracker.exact(d);
      REQUIRE(p);
      Rational ratio = (Rational(1, 2) - *p) / *p;
      REQUIRE(ratio >= start * factor);
      REQUIRE(ratio >= growth);
      if (*p >= Rational(1, 4)) {
        REQUIRE(factor <= n);
      }
      growth *= Rational(3, 2);
      factor *= Rational(3, 2);
    }
  }
}

TEST_CASE("FailureTracker") {
  FailureTracker t(Rational(1, 3));
  CHECK(*t.exact(0) == Rational(1, 3));
  CHECK(*t.exact(1) == Rational(7, 27));
  CHECK(t.at(3) == doctest::Approx(0.0742).epsilon(0.001));

  // Denominators grow threefold per step; past the cap only doubles remain.
  FailureTracker small(Rational(1, 3), 64);
  CHECK(small.exact(2));
  CHECK_FALSE(small.exact(6));
  double prev = small.at(0);
  for (std::size_t d = 1; d < 40; ++d) {
    REQUIRE(small.at(d) <= prev);
    prev = small.at(d);
  }
  CHECK(small.at(39) == 0.0);
  CHECK_THROWS_AS(FailureTracker(Rational(3, 4)), InputError);
}

TEST_CASE("initializer examples") {
  auto a = initializer(9, 3);
  CHECK(a.fixed());
  CHECK(a.m_low == 2);
  CHECK(a.p0 == Rational(5, 12));

  auto b = initializer(4, 4);
  CHECK(a.fixed());
  CHECK(b.m_low == 0);
  CHECK(b.mix_q == Rational(3, 7));
  CHECK(b.p0 == Rational(3, 7));
  CHECK(b.expected_m() == Rational(4, 7));

  for (int k = 1; k <= 15; ++k) {
    auto s = initializer(2 * k - 1, k);
    CHECK(s.fixed());
    CHECK(s.m_low == 1);
    CHECK(s.p0 == Rational(k - 1, 2 * k - 1));
    CHECK(s.p0 == p0_majority(2 * k - 1));
  }
  CHECK_THROWS_AS(initializer(3, 4), InputError);
  CHECK_THROWS_AS(initializer(3, 0), InputError);
}

TEST_CASE("initializer balances the two failures exactly for n <= 30") {
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto s = initializer(n, k);
      INFO("n=" << n << " k=" << k);
      REQUIRE(s.mix_q >= 0);
      REQUIRE(s.mix_q <= 1);
      int      m  = s.m_low;
      Rational q  = s.mix_q;
      Rational hf = q * hang_oracle(n, k, m);
      Rational ff = q * fall_oracle(n, k, m);
      if (q != 1) {
        hf += (1 - q) * hang_oracle(n, k, m + 1);
        ff += (1 - q) * fall_oracle(n, k, m + 1);
      }
      REQUIRE(hf == ff);
      REQUIRE(hf == s.p0);
      REQUIRE(s.expected_m() >= Rational(1, 2));
      REQUIRE(s.p0 <= Rational(1, 2) - s.expected_m() / (4 * n));
      REQUIRE(hang_failure(n, k, m) == hang_oracle(n, k, m));
      REQUIRE(fall_failure(n, k, m) == fall_oracle(n, k, m));
    }
  }
}

TEST_CASE("depth_schedule") {
  CHECK(depth_schedule(3, 0.125) == 3);
  CHECK(depth_schedule(5, 1.0 / 32) == 5);
  CHECK(depth_schedule(1, 0.01) == 0);
  CHECK(depth_schedule(1, 1, Rational(1, 1000)) == 0);
  CHECK(depth_schedule(5, 3, pow2_neg(10)) == 7);
  CHECK_THROWS_AS(depth_schedule(3, 0.5), InputError);
  CHECK_THROWS_AS(depth_schedule(3, 0.0), InputError);
  CHECK_THROWS_AS(depth_schedule(4, 0.1), InputError);

  // Oracle: iterate the recursion in doubles, skipping targets too close
  // to a trajectory point to call.
  for (int n = 3; n <= 31; n += 2) {
    for (unsigned e = 2; e <= 40; ++e) {
      double target = std::ldexp(1.0, -static_cast<int>(e));
      double p      = 0.5 - 0.5 / n;
      int    d      = 0;
      bool   close  = false;
      while (p >= target) {
        close = close || std::abs(p - target) < 1e-9 * target;
        p     = p * p * p + 3 * p * p * (1 - p);
        ++d;
      }
      close = close || std::abs(p - target) < 1e-9 * target;
      if (!close) {
        REQUIRE(depth_schedule(n, (n + 1) / 2, pow2_neg(e)) == d);
      }
    }
  }
}

TEST_CASE("depth_schedule stays within log_{3/2} n + log_2 n + C") {
  double worst = -1e9;
  for (int n = 3; n <= 301; n += 2) {
    int    d     = depth_schedule(n, (n + 1) / 2, pow2_neg(n));
    double bound = std::log(n) / std::log(1.5) + std::log2(n);
    worst        = std::max(worst, d - bound);
  }
  MESSAGE("largest d - (log_{3/2} n + log_2 n) for 2^-n targets: " << worst);
  CHECK(worst <= 3.0);
}

TEST_CASE("unpadded_phase_length") {
  CHECK(unpadded_phase_length(0) == 1);
  CHECK(unpadded_phase_length(1) == 18);
  CHECK(unpadded_phase_length(2) == 120);
  // Each level: three operands, each written twice with one pad per side.
  std::uint64_t x = 1;
  for (int d = 0; d <= 22; ++d) {
    REQUIRE(unpadded_phase_length(d) == x);
    x = 6 * x + 12;
  }
  CHECK_THROWS_AS(unpadded_phase_length(-1), InputError);
}

TEST_CASE("exponent_c") {
  CHECK(exponent_c() == doctest::Approx(7.004).epsilon(0.001 / 7.004));
  CHECK(std::log(6.0) / std::log(1.5) == doctest::Approx(4.419).epsilon(1e-4));
  CHECK(std::log2(6.0) == doctest::Approx(2.585).epsilon(1e-4));
}

TEST_CASE("binomial and pow2_neg") {
  for (int n = 0; n <= 40; ++n) {
    for (int r = 0; r <= n; ++r) {
      REQUIRE(binomial(n, r) == pascal(n, r));
    }
  }
  CHECK(pow2_neg(0) == 1);
  CHECK(pow2_neg(10) == Rational(1, 1024));
}
