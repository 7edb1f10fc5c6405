#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hangword {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // Failure probability after one 2-of-3 majority round: 3p^2 - 2p^3.
  // Fixed points 0, 1/2 and 1.
  Rational p_step(Rational const& p);
  double   p_step(double p);

  // 1/2 - 1/(2n), the failure probability of a single uniform symbol when
  // n = 2k - 1.
  Rational p0_majority(int n);

  // Trajectory p_0, p_1, ... of the majority recursion. Terms are exact
  // while their denominators stay under `exact_bits`, and tracked in double
  // precision after that.
  class FailureTracker {
   public:
    explicit FailureTracker(Rational p0, std::size_t exact_bits = 4096);

    // Extends the trajectory as needed.
    double at(std::size_t depth);
    std::optional<Rational> exact(std::size_t depth);

    std::size_t computed() const noexcept {
      return _approx.size();
    }

   private:
    void extend_to(std::size_t depth);

    std::size_t           _exact_bits;
    std::vector<Rational> _exact;
    std::vector<double>   _approx;
  };

  // Distribution of the depth-0 word for k-out-of-n: m distinct uniform
  // symbols, with m = m_low with probability mix_q and m_low + 1 otherwise.
  // The two failure probabilities (hanging on the first k-1 nails, falling
  // on the first k) are equal under the mix.
  struct InitializerSpec {
    int      n;
    int      k;
    int      m_low;
    Rational mix_q;
    Rational p0;

    bool fixed() const {
      return mix_q == 1;
    }
    Rational expected_m() const;
  };

  // P(some chosen index <= k-1) for m distinct uniform symbols.
  Rational hang_failure(int n, int k, int m);
  // P(every chosen index > k).
  Rational fall_failure(int n, int k, int m);

  InitializerSpec initializer(int n, int k);

  // Smallest d with p_d < target, starting from the initializer of (n, k).
  int depth_schedule(int n, int k, Rational const& target);
  int depth_schedule(int n, int k, double target);
  // Majority case, k = (n + 1) / 2; n must be odd.
  int depth_schedule(int n, double target);

  // 2^-e as an exact rational.
  Rational pow2_neg(unsigned e);

  // (17 * 6^d - 12) / 5: written length of the depth-d majority word when
  // every pad is a single symbol.
  std::uint64_t unpadded_phase_length(int d);

  // log_{3/2}(6) + log_2(6).
  double exponent_c();

  BigInt binomial(int n, int r);

}  // namespace hangword
