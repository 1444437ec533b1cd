#pragma once

namespace iftem {

/// Gaussian transmit pulse p(t) = (sqrt(pi)/a) * exp(-pi^2 t^2 / a^2).
///
/// The shaping parameter a = Tsym / (B3dB*Tsym) * sqrt(ln2 / 2) shrinks as
/// the 3 dB bandwidth grows. p is exactly the density of a normal with
/// sigma = a / (sqrt(2)*pi), which gives closed-form interval areas via the
/// Gaussian tail function.
class GaussianPulse {
 public:
  /// b3db_tsym is the dimensionless bandwidth-period product; tsym the
  /// symbol period in seconds. Both must be positive.
  explicit GaussianPulse(double b3db_tsym, double tsym = 1.0);

  double a() const { return a_; }
  double b3db_tsym() const { return b3db_tsym_; }
  double tsym() const { return tsym_; }

  /// Standard deviation of the equivalent normal density, a/(sqrt(2)*pi).
  double sigma() const { return sigma_; }

  /// p(t - shift).
  double value(double t, double shift = 0.0) const;

  /// Closed-form area of the shifted pulse over [t_lo, t_hi]:
  /// Q((t_lo-shift)/sigma) - Q((t_hi-shift)/sigma).
  /// Infinite endpoints are fine. Throws std::invalid_argument if
  /// t_lo > t_hi.
  double integral(double t_lo, double t_hi, double shift = 0.0) const;

  /// Pulse energy, integral of p^2 over the real line: sqrt(pi/2)/a.
  double energy() const;

  /// Truncation radius: beyond it the pulse is below 1e-15 of its peak,
  /// so evaluation windows can drop those terms with error under 1e-12
  /// of the peak for any practical block length.
  double cutoff_radius() const { return cutoff_; }

 private:
  double b3db_tsym_;
  double tsym_;
  double a_;
  double sigma_;
  double cutoff_;
};

}  // namespace iftem
