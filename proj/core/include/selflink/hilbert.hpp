#pragma once

#include <vector>

#include "selflink/ideal.hpp"

namespace selflink {

/// Hilbert data of a proper homogeneous ideal I in k[x_0..x_n]:
/// the Hilbert series of R/I is series_numerator(t) / (1-t)^(n+1), and
/// `polynomial` holds the Hilbert polynomial P (ascending coefficients,
/// empty = zero polynomial). `dimension` is the dimension of Proj(R/I)
/// (-1 for the empty scheme) and `degree` its degree (0 when empty).
/// P(t) equals the graded dimension of (R/I)_t for all t >= stability.
struct HilbertData {
  std::vector<long long> series_numerator;
  std::vector<Coeff> polynomial;
  int dimension = -1;
  mpz_class degree;
  int stability = 0;
  std::size_t nvars = 0;

  /// Exact value of the Hilbert polynomial at an integer.
  Coeff eval(long t) const;
};

/// Requires every generator homogeneous. The unit ideal reports the empty
/// scheme (P = 0, dimension -1, degree 0) instead of failing: degenerate
/// inputs from random search must flow through.
HilbertData hilbert(const Ideal& ideal);

/// Codimension in the ambient projective space of the ideal's ring:
/// n - dimension; the empty scheme reports n + 1.
int codim(const Ideal& ideal);

} // namespace selflink
