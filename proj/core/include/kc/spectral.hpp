#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kc/matrix.hpp"

namespace kc {

/// Thrown when the QR iteration exceeds its sweep budget. Conditions must
/// never be decided on partial numerics, so this is an error, not a result.
class EigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Spectrum {
  /// All eigenvalues with multiplicity, sorted by (real desc, imag desc).
  /// Complex eigenvalues of real matrices come in conjugate pairs.
  std::vector<std::complex<double>> eigenvalues;
  /// Max real part; -inf for the empty (0x0) spectrum.
  double max_real_part = -std::numeric_limits<double>::infinity();
};

/// Eigenvalues of a small dense real matrix, generally nonsymmetric:
/// balance, Householder reduction to Hessenberg form, then Francis
/// double-shift QR. Throws std::invalid_argument for non-square or
/// non-finite input and EigError if the iteration does not converge
/// within 100 * dim sweeps.
Spectrum eig(const Mat& m);

struct HurwitzVerdict {
  bool hurwitz = false;
  double max_real_part = 0.0;
};

/// True iff every eigenvalue satisfies Re(lambda) < -margin.
HurwitzVerdict is_hurwitz(const Mat& m, double margin = 0.0);

}  // namespace kc
