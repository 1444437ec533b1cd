#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace iftem {

/// Gaussian tail probability Q(x) = P(N(0,1) > x) = erfc(x/sqrt(2))/2.
/// Relative error is that of the platform erfc (a few ulp, well inside
/// 1e-14 for |x| <= 8).
double q_function(double x);

/// Minimal dense row-major matrix. Just enough linear-algebra surface for
/// the ISI matrix and the least-squares solve; not a general math type.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static Matrix identity(int n);
};

/// Dense matrix-vector product y = A*x.
std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x);

struct LeastSquaresSolution {
  std::vector<double> x;      // minimizer of ||A x - rhs||_2
  double residual_norm = 0.0;
  double condition = 0.0;     // estimate of cond_2(A)
};

/// Least squares via a column-pivoted QR factorization. The condition
/// estimate is the ratio of extreme |R| diagonal entries (cheap bound);
/// an SVD-based estimate replaces it only when the cheap bound comes
/// within a factor 100 of `cond_cap`. Throws IllConditionedError when the
/// estimate exceeds `cond_cap`.
LeastSquaresSolution solve_ls(const Matrix& a, const std::vector<double>& rhs,
                              double cond_cap = 1e8);

/// Golden-section search for the maximizer of f on [lo, hi].
/// f must be unimodal on the bracket for an exact answer; tol is the
/// absolute tolerance on the returned abscissa.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-10);

/// Stateless avalanche mix of (master, a, b, c) into a stream seed.
/// Used to derive independent per-trial RNG streams from indices, so the
/// noise stream of a trial never depends on thread schedule.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c);

/// Deterministic standard-normal stream over a 64-bit Mersenne Twister.
/// Box-Muller without pair caching: every call consumes exactly two
/// 64-bit draws and yields exactly one normal, so stream position is a
/// pure function of the call count.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : gen_(seed) {}

  double next();

 private:
  std::mt19937_64 gen_;
};

}  // namespace iftem
