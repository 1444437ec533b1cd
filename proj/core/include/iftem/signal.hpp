#pragma once

#include <vector>

#include "iftem/pulse.hpp"

namespace iftem {

/// One transmitted block: L pulse-amplitude symbols shaped by a Gaussian
/// pulse at period Tsym, X(t) = sum_l s_l * p(t - l*Tsym).
struct TxBlock {
  std::vector<double> symbols;  // constellation levels, length L
  GaussianPulse pulse;

  int length() const { return static_cast<int>(symbols.size()); }
};

/// X(t). Terms with |t - l*Tsym| beyond the pulse cutoff radius are
/// dropped, keeping evaluation O(window) in the block length.
double tx_signal_value(const TxBlock& block, double t);

/// Integral of X over [t_lo, t_hi], in closed form via per-pulse
/// Gaussian-tail differences (no quadrature). Throws std::invalid_argument
/// if t_lo > t_hi.
double tx_signal_integral(const TxBlock& block, double t_lo, double t_hi);

/// Max of |X(t)| over [-0.5*Tsym, (L-0.5)*Tsym]: dense scan at 64 points
/// per symbol period, then golden-section refinement around the best cell.
double tx_signal_max_abs(const TxBlock& block);

/// Streaming cumulative integral C(t) = integral of X from t_anchor to t,
/// for nondecreasing queries. Symbols that fall fully behind the moving
/// window are folded into a saturated prefix, so each call costs one tail
/// evaluation per in-window symbol. Used by the sampler's grid walk.
class SignalCumulator {
 public:
  SignalCumulator(const TxBlock& block, double t_anchor);

  /// Cumulative integral from the anchor. t must be nondecreasing across
  /// calls.
  double cumulative(double t);

 private:
  const TxBlock& block_;
  double t_anchor_;
  double sigma_;
  double radius_;
  std::vector<double> base_;  // per-symbol Q((t_anchor - l*Tsym)/sigma)
  int next_saturated_ = 0;    // first symbol index not yet folded
  double saturated_ = 0.0;
};

}  // namespace iftem
