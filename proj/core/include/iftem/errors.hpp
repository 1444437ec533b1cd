#pragma once

#include <stdexcept>
#include <string>

namespace iftem {

/// A symbol interval held fewer than two firings, so the interval
/// statistic (t_max - t_min) is undefined. Usually means the firing
/// rate is configured too low for the signal dynamics.
class FiringDeficitError : public std::runtime_error {
 public:
  explicit FiringDeficitError(int interval)
      : std::runtime_error("firing deficit in symbol interval " +
                           std::to_string(interval)),
        interval_(interval) {}

  int interval() const noexcept { return interval_; }

 private:
  int interval_;
};

/// The ISI matrix is too ill-conditioned for zero-forcing detection.
/// Typically the pulse bandwidth is too narrow for the block length.
class IllConditionedError : public std::runtime_error {
 public:
  IllConditionedError(double condition, double cap)
      : std::runtime_error("matrix condition estimate " +
                           std::to_string(condition) + " exceeds cap " +
                           std::to_string(cap)),
        condition_(condition),
        cap_(cap) {}

  double condition() const noexcept { return condition_; }
  double cap() const noexcept { return cap_; }

 private:
  double condition_;
  double cap_;
};

/// The biased input stayed nonpositive long enough that the integrator
/// stalled (no firing for an extended stretch). Signals that the bias
/// is too small for the signal-plus-noise amplitude.
class NonPositiveDriveError : public std::runtime_error {
 public:
  explicit NonPositiveDriveError(double at_time)
      : std::runtime_error("integrator stalled near t = " +
                           std::to_string(at_time) +
                           "; bias too small for the input amplitude"),
        at_time_(at_time) {}

  double at_time() const noexcept { return at_time_; }

 private:
  double at_time_;
};

/// Configuration file or override could not be parsed or failed validation.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iftem
