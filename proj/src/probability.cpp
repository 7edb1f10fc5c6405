#include "hangword/probability.hpp"

#include <cmath>

#include "hangword/errors.hpp"

namespace hangword {

  namespace {
    void check_probability(Rational const& p) {
      if (p < 0 || p > 1) {
        throw InputError("probability outside [0, 1]");
      }
    }
  }  // namespace

  Rational p_step(Rational const& p) {
    check_probability(p);
    return 3 * p * p - 2 * p * p * p;
  }

  double p_step(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InputError("probability outside [0, 1]");
    }
    return 3 * p * p - 2 * p * p * p;
  }

  Rational p0_majority(int n) {
    if (n < 1 || n % 2 == 0) {
      throw InputError("majority initializer needs odd n, got "
                       + std::to_string(n));
    }
    return Rational(1, 2) - Rational(1, 2 * n);
  }

  FailureTracker::FailureTracker(Rational p0, std::size_t exact_bits)
      : _exact_bits(exact_bits) {
    check_probability(p0);
    if (p0 > Rational(1, 2)) {
      throw InputError("initial failure probability above 1/2");
    }
    _approx.push_back(static_cast<double>(p0));
    _exact.push_back(std::move(p0));
  }

  void FailureTracker::extend_to(std::size_t depth) {
    while (_approx.size() <= depth) {
      if (_exact.size() == _approx.size()) {
        Rational next = p_step(_exact.back());
        if (msb(denominator(next)) < _exact_bits) {
          _approx.push_back(static_cast<double>(next));
          _exact.push_back(std::move(next));
          continue;
        }
      }
      _approx.push_back(p_step(_approx.back()));
    }
  }

  double FailureTracker::at(std::size_t depth) {
    extend_to(depth);
    return _approx[depth];
  }

  std::optional<Rational> FailureTracker::exact(std::size_t depth) {
    extend_to(depth);
    if (depth < _exact.size()) {
      return _exact[depth];
    }
    return std::nullopt;
  }

  BigInt binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) {
      return 0;
    }
    BigInt result = 1;
    for (int i = 1; i <= r; ++i) {
      result = result * (n - r + i) / i;
    }
    return result;
  }

  Rational hang_failure(int n, int k, int m) {
    return 1 - Rational(binomial(n - k + 1, m), binomial(n, m));
  }

  Rational fall_failure(int n, int k, int m) {
    return Rational(binomial(n - k, m), binomial(n, m));
  }

  Rational InitializerSpec::expected_m() const {
    return mix_q * m_low + (1 - mix_q) * (m_low + 1);
  }

  InitializerSpec initializer(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
      throw InputError("initializer needs 1 <= k <= n");
    }
    // hang_failure - fall_failure runs from -1 at m = 0 to >= 0 at m = n;
    // find where it changes sign.
    Rational prev = hang_failure(n, k, 0) - fall_failure(n, k, 0);
    for (int m = 1; m <= n; ++m) {
      Rational diff = hang_failure(n, k, m) - fall_failure(n, k, m);
      if (diff == 0) {
        return {n, k, m, Rational(1), hang_failure(n, k, m)};
      }
      if (diff > 0) {
        Rational q  = diff / (diff - prev);
        Rational p0 = q * hang_failure(n, k, m - 1)
                      + (1 - q) * hang_failure(n, k, m);
        return {n, k, m - 1, q, p0};
      }
      prev = diff;
    }
    throw InputError("initializer found no balancing m");
  }

  Rational pow2_neg(unsigned e) {
    BigInt den = 1;
    den <<= e;
    return Rational(BigInt(1), den);
  }

  int depth_schedule(int n, int k, Rational const& target) {
    if (target <= 0 || target >= Rational(1, 2)) {
      throw InputError("depth target must lie in (0, 1/2)");
    }
    FailureTracker tracker(initializer(n, k).p0);
    for (std::size_t d = 0;; ++d) {
      if (auto exact = tracker.exact(d)) {
        if (*exact < target) {
          return static_cast<int>(d);
        }
      } else if (tracker.at(d) < static_cast<double>(target)) {
        return static_cast<int>(d);
      }
    }
  }

  int depth_schedule(int n, int k, double target) {
    if (!(target > 0.0 && target < 0.5)) {
      throw InputError("depth target must lie in (0, 1/2)");
    }
    // Doubles are dyadic, so the conversion is exact.
    return depth_schedule(n, k, Rational(target));
  }

  int depth_schedule(int n, double target) {
    p0_majority(n);
    return depth_schedule(n, (n + 1) / 2, target);
  }

  std::uint64_t unpadded_phase_length(int d) {
    if (d < 0 || d > 22) {
      throw InputError("unpadded_phase_length needs 0 <= d <= 22");
    }
    std::uint64_t six_d = 1;
    for (int i = 0; i < d; ++i) {
      six_d *= 6;
    }
    return (17 * six_d - 12) / 5;
  }

  double exponent_c() {
    return std::log(6.0) / std::log(1.5) + std::log(6.0) / std::log(2.0);
  }

}  // namespace hangword
